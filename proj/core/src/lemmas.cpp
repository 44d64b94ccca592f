#include "amalgam/lemmas.hpp"

#include "oracle_detail.hpp"

namespace amalgam::lemmas {

using detail::Side;
using detail::settle;

namespace {

const Rational kZero(0);
const Rational kOne(1);

Verdict sufficient(const std::string& id, bool holds, const std::string& label) {
  if (holds) {
    Verdict v;
    v.status = Status::Holds;
    v.theorem_id = id;
    v.clause = label;
    return v;
  }
  return detail::outside(id, "sufficient condition not met: " + label);
}

Verdict needs_small_p(const std::string& id) { return detail::outside(id, "needs 0 < p <= 1"); }

}  // namespace

Verdict sobolev_to_wiener_same_p(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, Dimension d) {
  const std::string id = "external-sharp:sobolev-to-wiener-same-p";
  if (p.u() > Rational(1)) return detail::outside(id, "needs 1 <= p <= inf");
  const bool strict = p.u() == Rational(1) ? !q.is_infinite() : q.u() > max(p.u(), Rational(1, 2));
  return settle(id, Side::AtLeast, s,
                {strict ? "s > tau1" : "s >= tau1", tau1(p, q, d), strict, FamilyKind::ModulatedBump});
}

Verdict hardy_to_wiener_same_p(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, Dimension d) {
  const bool strict = q.u() > max(p.u(), Rational(1, 2));
  return settle("external-sharp:hardy-to-wiener-same-p", Side::AtLeast, s,
                {strict ? "s > tau1" : "s >= tau1", tau1(p, q, d), strict, FamilyKind::ModulatedBump});
}

Verdict wiener_to_hardy_same_p(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, Dimension d) {
  const bool strict = q.u() < min(p.u(), Rational(1, 2));
  return settle("external-sharp:wiener-to-hardy-same-p", Side::AtMost, s,
                {strict ? "s < sigma1" : "s <= sigma1", sigma1(p, q, d), strict, FamilyKind::ModulatedBump});
}

Verdict besov_to_wiener_same(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, Dimension d) {
  const bool strict = p.u() > q.u();
  return settle("external-sharp:besov-to-wiener-same", Side::AtLeast, s,
                {strict ? "s > tau1" : "s >= tau1", tau1(p, q, d), strict, FamilyKind::DyadicShellSum});
}

Verdict wiener_to_besov_same(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, Dimension d) {
  const bool strict = p.u() < q.u();
  return settle("external-sharp:wiener-to-besov-same", Side::AtMost, s,
                {strict ? "s < sigma1" : "s <= sigma1", sigma1(p, q, d), strict, FamilyKind::DyadicShellSum});
}

Verdict besov_to_modulation_same(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, Dimension d) {
  return settle("external-sharp:besov-to-modulation", Side::AtLeast, s,
                {"s >= tau", tau(p, q, d), false, FamilyKind::DyadicShellSum});
}

Verdict alpha_to_modulation(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, AlphaParam alpha,
                            Dimension d) {
  return settle("external-sharp:alpha-modulation-to-modulation", Side::AtLeast, s,
                {"s >= alpha tau", alpha.value * tau(p, q, d), false, FamilyKind::AlphaBlockTranslates});
}

Verdict modulation_to_alpha(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, AlphaParam alpha,
                            Dimension d) {
  return settle("external-sharp:modulation-to-alpha-modulation", Side::AtMost, s,
                {"s <= alpha sigma", alpha.value * sigma(p, q, d), false, FamilyKind::AlphaBlockTranslates});
}

Verdict besov_to_alpha(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, AlphaParam alpha,
                       Dimension d) {
  return settle("external-sharp:besov-to-alpha-modulation", Side::AtLeast, s,
                {"s >= (1-alpha) tau", (kOne - alpha.value) * tau(p, q, d), false, FamilyKind::DyadicShellSum});
}

Verdict alpha_to_besov(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, AlphaParam alpha,
                       Dimension d) {
  return settle("external-sharp:alpha-modulation-to-besov", Side::AtMost, s,
                {"s <= (1-alpha) sigma", (kOne - alpha.value) * sigma(p, q, d), false, FamilyKind::DyadicShellSum});
}

Verdict triebel_to_modulation(const ReciprocalIndex& p, const ReciprocalIndex& q, const ReciprocalIndex& /*r*/,
                              const Rational& s, Dimension d) {
  const std::string id = "external-sharp:triebel-to-modulation";
  if (p.u() < kOne) return needs_small_p(id);
  const Rational t = Rational(d.value) * (p.u() + q.u() - kOne);
  if (p.u() >= q.u()) return settle(id, Side::AtLeast, s, {"(1)", t, false, FamilyKind::DyadicShellSum});
  return settle(id, Side::AtLeast, s, {"(2)", t, true, FamilyKind::DyadicShellSum});
}

Verdict modulation_to_triebel(const ReciprocalIndex& p, const ReciprocalIndex& q, const ReciprocalIndex& r,
                              const Rational& s, Dimension d) {
  const std::string id = "external-sharp:modulation-to-triebel";
  if (p.u() < kOne) return needs_small_p(id);
  if (p.u() <= q.u()) {
    if (r.u() <= q.u()) return settle(id, Side::AtMost, s, {"(1)", kZero, false, FamilyKind::ModulatedBump});
    return settle(id, Side::AtMost, s, {"(2)", kZero, true, FamilyKind::UniformLacunary});
  }
  return settle(id, Side::AtMost, s,
                {"(3)", Rational(d.value) * (q.u() - p.u()), true, FamilyKind::SpreadTranslates});
}

Verdict amalgam_monotone(const ReciprocalIndex& p1, const ReciprocalIndex& q1, const Rational& s1,
                         const ReciprocalIndex& p0, const ReciprocalIndex& q0, const Rational& s0) {
  return sufficient("sufficient:amalgam-monotone", s0 <= s1 && p_less_equal(p1, p0) && p_less_equal(q1, q0),
                    "s0 <= s1, p1 <= p0, q1 <= q0");
}

Verdict amalgam_trade_q(const ReciprocalIndex& q, const Rational& s, const ReciprocalIndex& q1, const Rational& s1,
                        Dimension d) {
  const Rational dd(d.value);
  return sufficient("sufficient:amalgam-trade-q", p_less(q1, q) && s + dd * q.u() > s1 + dd * q1.u(),
                    "q1 < q, s + d/q > s1 + d/q1");
}

Verdict modulation_wiener_same(const ReciprocalIndex& p, const ReciprocalIndex& q, bool modulation_first) {
  if (modulation_first) return sufficient("sufficient:modulation-to-wiener-same", p.u() <= q.u(), "p >= q");
  return sufficient("sufficient:wiener-to-modulation-same", p.u() >= q.u(), "p <= q");
}

Verdict dyadic_monotone_q(const ReciprocalIndex& q1, const ReciprocalIndex& q2) {
  return sufficient("sufficient:dyadic-monotone-q", p_less_equal(q1, q2), "q1 <= q2");
}

Verdict dyadic_smoothness_gain(const Rational& s_src, const Rational& s_dst) {
  return sufficient("sufficient:dyadic-smoothness-gain", s_src > s_dst, "s_src > s_dst");
}

Verdict besov_triebel_sandwich(const ReciprocalIndex& p, const ReciprocalIndex& q_besov,
                               const ReciprocalIndex& q_triebel, bool besov_first) {
  if (besov_first) {
    return sufficient("sufficient:besov-to-triebel", p_less_equal(q_besov, p_min(p, q_triebel)),
                      "q_besov <= min(p, q_triebel)");
  }
  return sufficient("sufficient:triebel-to-besov", p_less_equal(p_max(p, q_triebel), q_besov),
                    "q_besov >= max(p, q_triebel)");
}

Verdict dyadic_sobolev_type(const ReciprocalIndex& p1, const Rational& s1, const ReciprocalIndex& p2,
                            const Rational& s2, Dimension d, bool triebel) {
  const Rational dd(d.value);
  const bool balanced = s1 - dd * p1.u() == s2 - dd * p2.u();
  if (triebel) {
    return sufficient("sufficient:triebel-sobolev-type", balanced && p_less(p1, p2), "p1 < p2, s1 - d/p1 = s2 - d/p2");
  }
  return sufficient("sufficient:besov-sobolev-type", balanced && p_less_equal(p1, p2),
                    "p1 <= p2, s1 - d/p1 = s2 - d/p2");
}

}  // namespace amalgam::lemmas
