#ifndef HORACIRC_ORACLE_HPP
#define HORACIRC_ORACLE_HPP

#include "horacirc/circulant.hpp"
#include "horacirc/matrix.hpp"
#include "horacirc/rational.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace horacirc {

struct OracleResult {
  double max_singular = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  /// Termination measure: relative Rayleigh-quotient change for
  /// max_singular_value, eigen-residual for perron_root.
  double residual = 0.0;
};

/// Exact Gram matrix B = C^T C of the circulant with the given first row.
/// Row 1 of B reproduces the cyclic autocorrelation sums of the row, and
/// every row of B sums to (sum of entries)^2.
inline Matrix<Rat> gram_matrix(const CirculantSpec& spec) {
  const Matrix<Rat> c = materialize(spec);
  const std::size_t n = c.rows();
  Matrix<Rat> b(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rat acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += c(k, i) * c(k, j);
      b(i, j) = acc;
      b(j, i) = acc;
    }
  }
  return b;
}

namespace detail {

struct PowerRun {
  double rayleigh = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  double residual = 0.0;
};

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline double norm2(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

inline void subtract_mean(std::vector<double>& v) {
  double mean = 0.0;
  for (const double c : v) mean += c;
  mean /= static_cast<double>(v.size());
  for (double& c : v) c -= mean;
}

/// Power iteration on a symmetric PSD matrix stored row-major; terminates on
/// relative Rayleigh-quotient change below tol. A zero image means the start
/// vector sits in the kernel, which counts as converging to eigenvalue 0.
/// With recenter set, every iterate is projected back onto the complement of
/// the all-ones direction, confining the run to that invariant subspace.
inline PowerRun power_iterate_sym(const std::vector<double>& b, std::size_t n,
                                  std::vector<double> v, double tol, std::size_t max_iter,
                                  bool recenter) {
  if (recenter) subtract_mean(v);
  const double vnorm = norm2(v);
  if (vnorm == 0.0) return PowerRun{0.0, 1, true, 0.0};
  for (double& c : v) c /= vnorm;
  std::vector<double> w(n, 0.0);
  double rho_prev = 0.0;
  double change = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      const double* row = &b[i * n];
      for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j];
      w[i] = acc;
    }
    if (recenter) subtract_mean(w);
    const double rho = dot(v, w);
    const double wnorm = norm2(w);
    if (wnorm == 0.0) return PowerRun{0.0, it, true, 0.0};
    if (it > 1) {
      change = std::abs(rho - rho_prev) / std::max(std::abs(rho), std::numeric_limits<double>::min());
      if (change < tol) return PowerRun{rho, it, true, change};
    }
    rho_prev = rho;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wnorm;
  }
  return PowerRun{rho_prev, max_iter, false, change};
}

}  // namespace detail

/// Numeric estimate of the largest singular value of the circulant, computed
/// independently of any eigenvalue formula: power iteration on the Gram
/// matrix in double precision. The Gram matrix of a circulant is itself
/// circulant, so the all-ones vector spans an exact one-dimensional
/// eigenspace (eigenvalue: the squared entry total) and a single generic run
/// would report that eigenvalue as converged even when a complement
/// eigenvalue is larger — mixed-sign rows hit exactly that trap. Two runs
/// avoid it soundly: one along the ones direction, one confined to its
/// orthogonal complement via re-centering; the answer is the larger Rayleigh
/// quotient. A centered ramp start overlaps every complement eigenspace of a
/// circulant, so the second run cannot miss the complement maximum.
inline OracleResult max_singular_value(const CirculantSpec& spec, double tol = 1e-12,
                                       std::size_t max_iter = 10000) {
  detail::require_nonempty(spec);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_iter == 0) throw std::invalid_argument("iteration budget must be positive");
  const std::size_t n = spec.size();
  const std::vector<double> x = detail::row_as_doubles(spec);

  std::vector<double> c(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      c[k * n + j] =
          x[cyclic_index(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(k), n)];
    }
  }
  std::vector<double> b(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += c[k * n + i] * c[k * n + j];
      b[i * n + j] = acc;
      b[j * n + i] = acc;
    }
  }

  detail::PowerRun best =
      detail::power_iterate_sym(b, n, std::vector<double>(n, 1.0), tol, max_iter, false);
  std::size_t total_iterations = best.iterations;
  bool converged = best.converged;
  if (n > 1) {
    std::vector<double> ramp(n);
    for (std::size_t i = 0; i < n; ++i) {
      ramp[i] = static_cast<double>(i + 1) - 0.5 * static_cast<double>(n + 1);
    }
    const detail::PowerRun complement =
        detail::power_iterate_sym(b, n, ramp, tol, max_iter, true);
    total_iterations += complement.iterations;
    converged = converged && complement.converged;
    if (complement.rayleigh > best.rayleigh) best = complement;
  }
  return OracleResult{std::sqrt(std::max(best.rayleigh, 0.0)), total_iterations, converged,
                      best.residual};
}

/// Power iteration for the dominant eigenvalue of an entrywise nonnegative
/// matrix. Terminates when the eigen-residual ||A v - lambda v|| drops below
/// tol relative to max(|lambda|, 1), so an exact eigenvector start converges
/// immediately.
inline OracleResult perron_root(const Matrix<Rat>& a, double tol = 1e-12,
                                std::size_t max_iter = 10000) {
  if (a.rows() == 0) throw std::invalid_argument("empty matrix");
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_iter == 0) throw std::invalid_argument("iteration budget must be positive");
  const std::size_t n = a.rows();
  std::vector<double> ad(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) < 0) {
        throw std::domain_error("not entrywise nonnegative (entry " + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      }
      ad[i * n + j] = to_double_checked(a(i, j));
    }
  }

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> w(n, 0.0);
  double lambda = 0.0;
  double residual = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      const double* row = &ad[i * n];
      for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j];
      w[i] = acc;
    }
    lambda = detail::dot(v, w);
    double residual_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = w[i] - lambda * v[i];
      residual_sq += d * d;
    }
    residual = std::sqrt(residual_sq) / std::max(std::abs(lambda), 1.0);
    if (residual <= tol) return OracleResult{lambda, it, true, residual};
    const double wnorm = detail::norm2(w);
    if (wnorm == 0.0) return OracleResult{0.0, it, true, 0.0};
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wnorm;
  }
  return OracleResult{lambda, max_iter, false, residual};
}

}  // namespace horacirc

#endif  // HORACIRC_ORACLE_HPP
