#pragma once

#include <string>
#include <string_view>

#include "amalgam/rational.hpp"

namespace amalgam {

/// A Lebesgue exponent p in (0, inf], stored as its reciprocal u = 1/p.
///
/// u = 0 encodes p = inf and u > 1 encodes the quasi-Banach range 0 < p < 1.
/// Comparisons between exponents are always made on the reciprocal scale:
/// p <= r holds exactly when u_p >= u_r.
class ReciprocalIndex {
 public:
  ReciprocalIndex() = default;
  explicit ReciprocalIndex(Rational u);

  static ReciprocalIndex infinity() { return ReciprocalIndex(Rational(0)); }
  /// Exponent p given directly (p > 0).
  static ReciprocalIndex from_exponent(const Rational& p);
  /// Parses "inf" or a positive rational exponent such as "2" or "1/2".
  static ReciprocalIndex parse(std::string_view text);

  const Rational& u() const noexcept { return u_; }
  bool is_infinite() const noexcept { return u_.is_zero(); }
  /// The exponent p as a double (inf for u = 0).
  double exponent() const noexcept;
  /// "inf" or the exponent p = 1/u as a rational string.
  std::string to_string() const;

  friend bool operator==(const ReciprocalIndex&, const ReciprocalIndex&) = default;

 private:
  Rational u_{0};
};

// Exponent-scale comparisons (p vs r), expressed through reciprocals.
inline bool p_less_equal(const ReciprocalIndex& p, const ReciprocalIndex& r) { return p.u() >= r.u(); }
inline bool p_less(const ReciprocalIndex& p, const ReciprocalIndex& r) { return p.u() > r.u(); }
/// p ∧ q = min(p, q): the larger reciprocal.
inline ReciprocalIndex p_min(const ReciprocalIndex& p, const ReciprocalIndex& q) {
  return p.u() >= q.u() ? p : q;
}
/// p ∨ q = max(p, q): the smaller reciprocal.
inline ReciprocalIndex p_max(const ReciprocalIndex& p, const ReciprocalIndex& q) {
  return p.u() <= q.u() ? p : q;
}

/// Ambient dimension d >= 1.
struct Dimension {
  explicit Dimension(int d);
  int value;
};

/// Interpolation parameter of alpha-modulation spaces, 0 < alpha < 1.
struct AlphaParam {
  explicit AlphaParam(Rational a);
  Rational value;
};

/// d * max(0, v - 1/2, u + v - 1) with u = 1/p, v = 1/q.
Rational tau1(const ReciprocalIndex& p, const ReciprocalIndex& q, Dimension d);
/// d * min(0, v - 1/2, u + v - 1).
Rational sigma1(const ReciprocalIndex& p, const ReciprocalIndex& q, Dimension d);

struct IndexTriple {
  Rational tau;
  Rational sigma;
  Rational a;
};

/// tau = d max(0, v-u, u+v-1), sigma = d min(0, v-u, u+v-1), a = d(u+v-1).
IndexTriple tau_sigma_a(const ReciprocalIndex& p, const ReciprocalIndex& q, Dimension d);
inline Rational tau(const ReciprocalIndex& p, const ReciprocalIndex& q, Dimension d) {
  return tau_sigma_a(p, q, d).tau;
}
inline Rational sigma(const ReciprocalIndex& p, const ReciprocalIndex& q, Dimension d) {
  return tau_sigma_a(p, q, d).sigma;
}

/// Which linear piece of tau1 / sigma1 is active at (1/p, 1/q).
///
/// Pieces are numbered 1: the constant 0, 2: v - 1/2, 3: u + v - 1.
/// `piece` is the lowest-numbered piece attaining the extremum; `ties` has
/// bit (k-1) set for every piece k that attains it.
struct PieceClassification {
  int piece = 1;
  unsigned ties = 1;
};

PieceClassification tau1_piece(const ReciprocalIndex& p, const ReciprocalIndex& q);
PieceClassification sigma1_piece(const ReciprocalIndex& p, const ReciprocalIndex& q);

/// Dual exponent: 1/p + 1/p' = 1 for p >= 1, and p' = inf for p < 1.
ReciprocalIndex dual_index(const ReciprocalIndex& p);

}  // namespace amalgam
