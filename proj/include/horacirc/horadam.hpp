#ifndef HORACIRC_HORADAM_HPP
#define HORACIRC_HORADAM_HPP

#include "horacirc/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace horacirc {

/// Two-term linear recurrence h0 = a, h1 = b, h_k = p*h_{k-1} + q*h_{k-2}.
struct RecurrenceParams {
  Int a;
  Int b;
  Int p;
  Int q;

  friend bool operator==(const RecurrenceParams&, const RecurrenceParams&) = default;
};

/// The first n terms of a recurrence, kept together with its parameters.
struct SequenceWindow {
  RecurrenceParams params;
  std::vector<Int> terms;

  std::size_t size() const { return terms.size(); }
};

inline SequenceWindow generate(const RecurrenceParams& params, std::size_t n) {
  if (n == 0) throw std::invalid_argument("empty window");
  std::vector<Int> terms;
  terms.reserve(n);
  terms.push_back(params.a);
  if (n >= 2) terms.push_back(params.b);
  for (std::size_t i = 2; i < n; ++i) {
    terms.push_back(params.p * terms[i - 1] + params.q * terms[i - 2]);
  }
  return SequenceWindow{params, std::move(terms)};
}

enum class SequenceKind { Fibonacci, GenFibonacci, Lucas, GenLucas };

inline RecurrenceParams named_params(SequenceKind kind, const Int& p = 1, const Int& q = 1) {
  switch (kind) {
    case SequenceKind::Fibonacci:
      return RecurrenceParams{0, 1, 1, 1};
    case SequenceKind::GenFibonacci:
      return RecurrenceParams{0, 1, p, q};
    case SequenceKind::Lucas:
      return RecurrenceParams{2, 1, 1, 1};
    case SequenceKind::GenLucas:
      return RecurrenceParams{2, p, p, q};
  }
  throw std::invalid_argument("unknown sequence kind");
}

inline SequenceWindow named_sequence(SequenceKind kind, std::size_t n, const Int& p = 1,
                                     const Int& q = 1) {
  return generate(named_params(kind, p, q), n);
}

/// The partial-sum closed form splits on the characteristic values below;
/// every (p, q) lands in exactly one branch.
enum class SumBranch { General, UnitSum, Arithmetic };

inline SumBranch sum_branch(const RecurrenceParams& params) {
  if (params.p + params.q != 1) return SumBranch::General;
  if (params.p != 2) return SumBranch::UnitSum;
  return SumBranch::Arithmetic;  // p = 2, q = -1: the window is an arithmetic progression
}

inline const char* sum_branch_label(SumBranch branch) {
  switch (branch) {
    case SumBranch::General:
      return "p+q != 1 general";
    case SumBranch::UnitSum:
      return "p+q = 1, p != 2";
    case SumBranch::Arithmetic:
      return "p=2, q=-1 arithmetic";
  }
  return "?";
}

/// Closed form for h_0 + ... + h_{n-1}. Each branch divides exactly; a
/// nonzero remainder would mean the formula itself is wrong, so it surfaces
/// as a logic_error rather than being rounded away.
inline Int sum_closed_form(const RecurrenceParams& params, std::size_t n) {
  if (n == 0) throw std::invalid_argument("empty window");
  const Int& a = params.a;
  const Int& b = params.b;
  const Int& p = params.p;
  const Int& q = params.q;
  switch (sum_branch(params)) {
    case SumBranch::General: {
      const SequenceWindow w = generate(params, n + 1);
      return exact_div(w.terms[n] + q * w.terms[n - 1] + (p - 1) * a - b, p + q - 1,
                       "recurrence sum, p+q != 1");
    }
    case SumBranch::UnitSum: {
      const SequenceWindow w = generate(params, n);
      return exact_div(q * w.terms[n - 1] + Int(n - 1) * (q * a + b) + a, q + 1,
                       "recurrence sum, p+q = 1");
    }
    case SumBranch::Arithmetic: {
      const SequenceWindow w = generate(params, n);
      return exact_div(Int(n) * (w.terms[n - 1] + a), 2, "recurrence sum, arithmetic");
    }
  }
  throw std::logic_error("recurrence sum: unhandled branch");
}

inline Int sum_direct(const SequenceWindow& window) {
  if (window.terms.empty()) throw std::invalid_argument("empty window");
  Int total = 0;
  for (const Int& term : window.terms) total += term;
  return total;
}

}  // namespace horacirc

#endif  // HORACIRC_HORADAM_HPP
