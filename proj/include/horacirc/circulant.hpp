#ifndef HORACIRC_CIRCULANT_HPP
#define HORACIRC_CIRCULANT_HPP

#include "horacirc/matrix.hpp"
#include "horacirc/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace horacirc {

using ComplexApprox = std::complex<double>;

/// First row of a circulant matrix; every following row is the previous one
/// shifted cyclically one place to the right.
struct CirculantSpec {
  std::vector<Rat> first_row;

  std::size_t size() const { return first_row.size(); }
};

/// Floored remainder: the representative of m mod n in [0, n), also for
/// negative m.
inline std::size_t cyclic_index(std::int64_t m, std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic index needs a positive modulus");
  const auto modulus = static_cast<std::int64_t>(n);
  std::int64_t r = m % modulus;
  if (r < 0) r += modulus;
  return static_cast<std::size_t>(r);
}

namespace detail {

inline void require_nonempty(const CirculantSpec& spec) {
  if (spec.first_row.empty()) throw std::invalid_argument("empty vector");
}

inline std::vector<double> row_as_doubles(const CirculantSpec& spec) {
  std::vector<double> out;
  out.reserve(spec.size());
  for (const Rat& v : spec.first_row) out.push_back(to_double_checked(v));
  return out;
}

/// table[k] = exp(-2*pi*i*k/n); all powers used below reduce into this table.
inline std::vector<ComplexApprox> unit_roots_neg(std::size_t n) {
  constexpr double two_pi = 6.283185307179586476925286766559;
  std::vector<ComplexApprox> table(n);
  for (std::size_t k = 0; k < n; ++k) {
    table[k] = std::polar(1.0, -two_pi * static_cast<double>(k) / static_cast<double>(n));
  }
  return table;
}

}  // namespace detail

/// Entry (k, j) of the circulant matrix is first_row[(j - k) mod n].
inline Matrix<Rat> materialize(const CirculantSpec& spec) {
  detail::require_nonempty(spec);
  const std::size_t n = spec.size();
  Matrix<Rat> m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) = spec.first_row[cyclic_index(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(k),
                                            n)];
    }
  }
  return m;
}

/// Eigenvalues lambda_i = sum_j x_j w^{-ij} for w = exp(2*pi*i/n); slot i-1
/// holds lambda_i for i = 1..n, so the plain entry sum lands in the last slot.
inline std::vector<ComplexApprox> eigenvalues_dft(const CirculantSpec& spec) {
  detail::require_nonempty(spec);
  const std::size_t n = spec.size();
  const std::vector<double> x = detail::row_as_doubles(spec);
  const std::vector<ComplexApprox> roots = detail::unit_roots_neg(n);
  std::vector<ComplexApprox> eigenvalues(n);
  for (std::size_t i = 1; i <= n; ++i) {
    ComplexApprox sum{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      sum += x[j] * roots[(i * j) % n];
    }
    eigenvalues[i - 1] = sum;
  }
  return eigenvalues;
}

/// Forward error constant for the quadratic-time transform above: the bound
/// reported alongside numeric results is
/// dft_error_constant * n^2 * machine_eps * max |x_j|.
inline constexpr double dft_error_constant = 8.0;

struct SpectrumApprox {
  std::vector<ComplexApprox> eigenvalues;
  std::vector<double> singular_values;  // |lambda_i|, same order as eigenvalues
  double max_singular = 0.0;
  double error_bound = 0.0;
};

inline SpectrumApprox spectral_norm_dft(const CirculantSpec& spec) {
  SpectrumApprox result;
  result.eigenvalues = eigenvalues_dft(spec);
  const std::size_t n = spec.size();
  double max_abs_entry = 0.0;
  for (const Rat& v : spec.first_row) {
    max_abs_entry = std::max(max_abs_entry, std::abs(to_double_checked(v)));
  }
  result.singular_values.reserve(n);
  for (const ComplexApprox& ev : result.eigenvalues) {
    const double magnitude = std::abs(ev);
    result.singular_values.push_back(magnitude);
    result.max_singular = std::max(result.max_singular, magnitude);
  }
  result.error_bound = dft_error_constant * static_cast<double>(n) * static_cast<double>(n) *
                       std::numeric_limits<double>::epsilon() * max_abs_entry;
  return result;
}

/// Exact circulant-times-vector product without materializing the matrix.
inline std::vector<Rat> matvec(const CirculantSpec& spec, const std::vector<Rat>& v) {
  detail::require_nonempty(spec);
  const std::size_t n = spec.size();
  if (v.size() != n) {
    throw std::invalid_argument("dimension mismatch: vector length != matrix order");
  }
  std::vector<Rat> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rat acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += spec.first_row[cyclic_index(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(k),
                                         n)] *
             v[j];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace horacirc

#endif  // HORACIRC_CIRCULANT_HPP
