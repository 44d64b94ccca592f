#pragma once

// Auxiliary embedding statements the main decision procedures rely on.
// Sharp ones ("external-sharp:*") are if-and-only-if characterizations from
// prior work; "sufficient:*" ones only ever return Holds or OutsideHypothesis.
// All smoothness arguments are already canonicalized (source minus target).

#include "amalgam/indices.hpp"
#include "amalgam/oracle.hpp"
#include "amalgam/rational.hpp"

namespace amalgam::lemmas {

/// L^{s,p} ↪ W_{p,q}, 1 <= p <= inf.
Verdict sobolev_to_wiener_same_p(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, Dimension d);
/// h_p ↪ W^{-s}_{p,q}: s >= tau1(p,q), strict when 1/q > max(1/p, 1/2).
Verdict hardy_to_wiener_same_p(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, Dimension d);
/// W^{-s}_{p,q} ↪ h_p: s <= sigma1(p,q), strict when 1/q < min(1/p, 1/2).
Verdict wiener_to_hardy_same_p(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, Dimension d);
/// B^s_{p,q} ↪ W_{p,q}: s >= tau1(p,q), strict when p < q.
Verdict besov_to_wiener_same(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, Dimension d);
/// W_{p,q} ↪ B^s_{p,q}: s <= sigma1(p,q), strict when p > q.
Verdict wiener_to_besov_same(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, Dimension d);
/// B^s_{p,q} ↪ M_{p,q} iff s >= tau(p,q).
Verdict besov_to_modulation_same(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, Dimension d);

/// M^{s,alpha}_{p,q} ↪ M_{p,q} iff s >= alpha tau(p,q).
Verdict alpha_to_modulation(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, AlphaParam alpha,
                            Dimension d);
/// M_{p,q} ↪ M^{s,alpha}_{p,q} iff s <= alpha sigma(p,q).
Verdict modulation_to_alpha(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, AlphaParam alpha,
                            Dimension d);
/// B^s_{p,q} ↪ M^{0,alpha}_{p,q} iff s >= (1-alpha) tau(p,q).
Verdict besov_to_alpha(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, AlphaParam alpha,
                       Dimension d);
/// M^{0,alpha}_{p,q} ↪ B^s_{p,q} iff s <= (1-alpha) sigma(p,q).
Verdict alpha_to_besov(const ReciprocalIndex& p, const ReciprocalIndex& q, const Rational& s, AlphaParam alpha,
                       Dimension d);

/// F^s_{p,r} ↪ M_{p,q}, 0 < p <= 1.
Verdict triebel_to_modulation(const ReciprocalIndex& p, const ReciprocalIndex& q, const ReciprocalIndex& r,
                              const Rational& s, Dimension d);
/// M_{p,q} ↪ F^s_{p,r}, 0 < p <= 1.
Verdict modulation_to_triebel(const ReciprocalIndex& p, const ReciprocalIndex& q, const ReciprocalIndex& r,
                              const Rational& s, Dimension d);

// Sufficient conditions for X = M or W (same family on both sides).

/// X^{s1}_{p1,q1} ↪ X^{s0}_{p0,q0} when s0 <= s1, p1 <= p0, q1 <= q0.
Verdict amalgam_monotone(const ReciprocalIndex& p1, const ReciprocalIndex& q1, const Rational& s1,
                         const ReciprocalIndex& p0, const ReciprocalIndex& q0, const Rational& s0);
/// X^s_{p,q} ↪ X^{s1}_{p,q1} when q1 < q and s + d/q > s1 + d/q1.
Verdict amalgam_trade_q(const ReciprocalIndex& q, const Rational& s, const ReciprocalIndex& q1, const Rational& s1,
                        Dimension d);
/// M^s_{p,q} ↪ W^s_{p,q} when p >= q (modulation_first) and the reverse when p <= q.
Verdict modulation_wiener_same(const ReciprocalIndex& p, const ReciprocalIndex& q, bool modulation_first);

// Sufficient conditions between Besov / Triebel spaces.

/// B (or F) ^s_{p,q1} ↪ ^s_{p,q2} when q1 <= q2.
Verdict dyadic_monotone_q(const ReciprocalIndex& q1, const ReciprocalIndex& q2);
/// ^{s+eps}_{p,q1} ↪ ^s_{p,q2} for any eps > 0 and any q1, q2.
Verdict dyadic_smoothness_gain(const Rational& s_src, const Rational& s_dst);
/// B^s_{p,min(p,q)} ↪ F^s_{p,q} ↪ B^s_{p,max(p,q)}; checks one of the two arrows.
Verdict besov_triebel_sandwich(const ReciprocalIndex& p, const ReciprocalIndex& q_besov, const ReciprocalIndex& q_triebel,
                               bool besov_first);
/// Sobolev-type B^{s1}_{p1,q} ↪ B^{s2}_{p2,q} (p1 <= p2) or F with p1 < p2, s1 - d/p1 = s2 - d/p2.
Verdict dyadic_sobolev_type(const ReciprocalIndex& p1, const Rational& s1, const ReciprocalIndex& p2,
                            const Rational& s2, Dimension d, bool triebel);

}  // namespace amalgam::lemmas
