#include "amalgam/indices.hpp"

#include <limits>

#include "amalgam/error.hpp"

namespace amalgam {

namespace {
const Rational kHalf(1, 2);
const Rational kOne(1);
}  // namespace

ReciprocalIndex::ReciprocalIndex(Rational u) : u_(u) {
  if (u_.sign() < 0) throw Error(ErrorKind::InvalidArgument, "reciprocal index must be >= 0");
}

ReciprocalIndex ReciprocalIndex::from_exponent(const Rational& p) {
  if (p.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "exponent must be positive, got " + p.to_string());
  return ReciprocalIndex(Rational(1) / p);
}

ReciprocalIndex ReciprocalIndex::parse(std::string_view text) {
  if (text == "inf" || text == "infty" || text == "Inf") return infinity();
  return from_exponent(Rational::parse(text));
}

double ReciprocalIndex::exponent() const noexcept {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return 1.0 / u_.to_double();
}

std::string ReciprocalIndex::to_string() const {
  if (is_infinite()) return "inf";
  return (Rational(1) / u_).to_string();
}

Dimension::Dimension(int d) : value(d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
}

AlphaParam::AlphaParam(Rational a) : value(a) {
  if (a <= Rational(0) || a >= Rational(1)) {
    throw Error(ErrorKind::InvalidArgument, "alpha must lie in (0,1), got " + a.to_string());
  }
}

Rational tau1(const ReciprocalIndex& p, const ReciprocalIndex& q, Dimension d) {
  const Rational& u = p.u();
  const Rational& v = q.u();
  return Rational(d.value) * max(Rational(0), max(v - kHalf, u + v - kOne));
}

Rational sigma1(const ReciprocalIndex& p, const ReciprocalIndex& q, Dimension d) {
  const Rational& u = p.u();
  const Rational& v = q.u();
  return Rational(d.value) * min(Rational(0), min(v - kHalf, u + v - kOne));
}

IndexTriple tau_sigma_a(const ReciprocalIndex& p, const ReciprocalIndex& q, Dimension d) {
  const Rational& u = p.u();
  const Rational& v = q.u();
  const Rational dd(d.value);
  const Rational a = u + v - kOne;
  return {dd * max(Rational(0), max(v - u, a)), dd * min(Rational(0), min(v - u, a)), dd * a};
}

namespace {

template <typename Better>
PieceClassification classify(const ReciprocalIndex& p, const ReciprocalIndex& q, Better better) {
  const Rational values[3] = {Rational(0), q.u() - kHalf, p.u() + q.u() - kOne};
  int best = 0;
  for (int k = 1; k < 3; ++k) {
    if (better(values[k], values[best])) best = k;
  }
  PieceClassification out{best + 1, 0};
  for (int k = 0; k < 3; ++k) {
    if (values[k] == values[best]) out.ties |= 1u << k;
  }
  return out;
}

}  // namespace

PieceClassification tau1_piece(const ReciprocalIndex& p, const ReciprocalIndex& q) {
  return classify(p, q, [](const Rational& a, const Rational& b) { return a > b; });
}

PieceClassification sigma1_piece(const ReciprocalIndex& p, const ReciprocalIndex& q) {
  return classify(p, q, [](const Rational& a, const Rational& b) { return a < b; });
}

ReciprocalIndex dual_index(const ReciprocalIndex& p) {
  if (p.u() > kOne) return ReciprocalIndex::infinity();
  return ReciprocalIndex(kOne - p.u());
}

}  // namespace amalgam
