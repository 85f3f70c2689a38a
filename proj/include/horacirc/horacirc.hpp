#ifndef HORACIRC_HORACIRC_HPP
#define HORACIRC_HORACIRC_HPP

// Umbrella header for the library proper. The command-line front end lives
// in horacirc/cli.hpp and is not pulled in here, since it drags in argument
// parsing and JSON serialization most library users do not want.

#include "horacirc/circulant.hpp"
#include "horacirc/closed_forms.hpp"
#include "horacirc/horadam.hpp"
#include "horacirc/matrix.hpp"
#include "horacirc/oracle.hpp"
#include "horacirc/rational.hpp"

#endif  // HORACIRC_HORACIRC_HPP
