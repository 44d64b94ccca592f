#include "amalgam/oracle.hpp"

#include "amalgam/error.hpp"
#include "amalgam/lemmas.hpp"
#include "oracle_detail.hpp"

namespace amalgam {

const char* to_string(Status status) noexcept {
  switch (status) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::OutsideHypothesis: return "OutsideHypothesis";
    case Status::OpenInPaper: return "OpenInPaper";
  }
  return "?";
}

const char* to_string(BoundaryKind boundary) noexcept {
  switch (boundary) {
    case BoundaryKind::Interior: return "Interior";
    case BoundaryKind::NonStrictBoundary: return "NonStrictBoundary";
    case BoundaryKind::StrictBoundaryExcluded: return "StrictBoundaryExcluded";
  }
  return "?";
}

namespace detail {

namespace {

const Rational kZero(0);
const Rational kHalf(1, 2);
const Rational kOne(1);

Rational dim(Dimension d) { return Rational(d.value); }

FamilyKind alpha_piece_hint(const PieceClassification& piece) {
  switch (piece.piece) {
    case 1: return FamilyKind::AlphaCenterTranslates;
    case 2: return FamilyKind::RademacherShell;
    default: return FamilyKind::AlphaBlockTranslates;
  }
}

}  // namespace

Verdict sobolev_to_wiener(const std::string& id, const RI& r, const RI& p, const RI& q, const Rational& s,
                          Dimension d) {
  if (r.u() > kOne || p.u() > kOne) return outside(id, "needs 1 <= p, r <= inf");
  if (!p_less_equal(r, p)) return index_failure(id, "index: r <= p", FamilyKind::ScaledBump);
  const Rational t = tau1(r, q, d);
  const auto piece = tau1_piece(r, q);
  if (r.u() == kOne) {
    if (q.u().is_zero()) return settle(id, Side::AtLeast, s, {"(3)", t, false, piece_hint(piece, false)});
    return settle(id, Side::AtLeast, s, {"(4)", t, true, FamilyKind::ApproxIdentity});
  }
  if (q.u() <= max(kHalf, r.u())) return settle(id, Side::AtLeast, s, {"(2)", t, false, piece_hint(piece, false)});
  return settle(id, Side::AtLeast, s, {"(1)", t, true, piece_hint(piece, true)});
}

Verdict wiener_to_sobolev(const std::string& id, const RI& p, const RI& q, const RI& r, const Rational& s,
                          Dimension d) {
  if (r.u() > kOne || p.u() > kOne) return outside(id, "needs 1 <= p, r <= inf");
  if (!p_less_equal(p, r)) return index_failure(id, "index: p <= r", FamilyKind::ScaledBump);
  const Rational t = sigma1(r, q, d);
  const auto piece = sigma1_piece(r, q);
  if (r.u().is_zero()) {
    if (q.u() >= kOne) return settle(id, Side::AtMost, s, {"(3)", t, false, piece_hint(piece, false)});
    return settle(id, Side::AtMost, s, {"(4)", t, true, FamilyKind::ApproxIdentity});
  }
  if (q.u() >= min(r.u(), kHalf)) return settle(id, Side::AtMost, s, {"(2)", t, false, piece_hint(piece, false)});
  return settle(id, Side::AtMost, s, {"(1)", t, true, piece_hint(piece, true)});
}

Verdict hardy_to_wiener(const std::string& id, const RI& r, const RI& p, const RI& q, const Rational& s,
                        Dimension d) {
  if (!p_less_equal(r, p)) return index_failure(id, "index: r <= p", FamilyKind::ScaledBump);
  const Rational t = tau1(r, q, d);
  const auto piece = tau1_piece(r, q);
  if (r.u() < q.u() && q.u() > kHalf) return settle(id, Side::AtLeast, s, {"(1)", t, true, piece_hint(piece, true)});
  return settle(id, Side::AtLeast, s, {"(2)", t, false, piece_hint(piece, false)});
}

Verdict wiener_to_hardy(const std::string& id, const RI& p, const RI& q, const RI& r, const Rational& s,
                        Dimension d) {
  if (!p_less_equal(p, r)) return index_failure(id, "index: p <= r", FamilyKind::ScaledBump);
  const Rational t = sigma1(r, q, d);
  const auto piece = sigma1_piece(r, q);
  if (r.u() > q.u() && q.u() < kHalf) return settle(id, Side::AtMost, s, {"(1)", t, true, piece_hint(piece, true)});
  return settle(id, Side::AtMost, s, {"(2)", t, false, piece_hint(piece, false)});
}

Verdict besov_p0_to_wiener(const std::string& id, const RI& p0, const RI& q, const RI& p, const Rational& s,
                           Dimension d) {
  if (!p_less_equal(p0, p)) return index_failure(id, "index: p0 <= p", FamilyKind::ScaledBump);
  const Rational t = tau1(p0, q, d);
  const auto piece = tau1_piece(p0, q);
  if (p.u() <= q.u()) return settle(id, Side::AtLeast, s, {"(1)", t, false, piece_hint(piece, false)});
  return settle(id, Side::AtLeast, s, {"(2)", t, true, piece_hint(piece, true)});
}

Verdict wiener_to_besov_p0(const std::string& id, const RI& p, const RI& q, const RI& p0, const Rational& s,
                           Dimension d) {
  if (!p_less_equal(p, p0)) return index_failure(id, "index: p <= p0", FamilyKind::ScaledBump);
  const Rational t = sigma1(p0, q, d);
  const auto piece = sigma1_piece(p0, q);
  if (p.u() >= q.u()) return settle(id, Side::AtMost, s, {"(1)", t, false, piece_hint(piece, false)});
  return settle(id, Side::AtMost, s, {"(2)", t, true, piece_hint(piece, true)});
}

namespace {

Verdict besov_q0_to_wiener(const RI& p, const RI& q0, const RI& q, const Rational& s, Dimension d) {
  const std::string id = "besov-q0-to-wiener";
  const bool hypothesis = q.u() <= max(q0.u(), kHalf) || p.u() >= min(q0.u(), kHalf);
  if (!hypothesis) return open_in_paper(id, "remark: q < min(q0,2) and p > max(q0,2) is unresolved");
  const Rational t = tau1(p, q, d);
  const auto piece = tau1_piece(p, q);
  if (q.u() > q0.u()) return settle(id, Side::AtLeast, s, {"(3)", t, true, piece_hint(piece, true)});
  if (q0.u() >= p.u()) return settle(id, Side::AtLeast, s, {"(1)", t, false, piece_hint(piece, false)});
  return settle(id, Side::AtLeast, s, {"(2)", t, true, piece_hint(piece, true)});
}

Verdict wiener_to_besov_q0(const RI& p, const RI& q, const RI& q0, const Rational& s, Dimension d) {
  const std::string id = "wiener-to-besov-q0";
  const bool hypothesis = q.u() >= min(q0.u(), kHalf) || p.u() <= max(q0.u(), kHalf);
  if (!hypothesis) return open_in_paper(id, "remark (dual): q > max(q0,2) and p < min(q0,2) is unresolved");
  const Rational t = sigma1(p, q, d);
  const auto piece = sigma1_piece(p, q);
  if (q.u() < q0.u()) return settle(id, Side::AtMost, s, {"(3)", t, true, piece_hint(piece, true)});
  if (q0.u() <= p.u()) return settle(id, Side::AtMost, s, {"(1)", t, false, piece_hint(piece, false)});
  return settle(id, Side::AtMost, s, {"(2)", t, true, piece_hint(piece, true)});
}

Verdict modulation_to_wiener(const RI& p1, const RI& q1, const RI& p, const RI& q, const Rational& s, Dimension d) {
  const std::string id = "modulation-to-wiener";
  if (!p_less_equal(p1, p)) return index_failure(id, "index: p1 <= p", FamilyKind::ScaledBump);
  const Rational m = max(p.u(), q.u());
  if (q1.u() >= m) return settle(id, Side::AtLeast, s, {"(1)", kZero, false, FamilyKind::ModulatedBump});
  const FamilyKind hint = p.u() >= q.u() ? FamilyKind::SpreadTranslates : FamilyKind::UniformLacunary;
  return settle(id, Side::AtLeast, s, {"(2)", dim(d) * (m - q1.u()), true, hint});
}

Verdict wiener_to_modulation(const RI& p, const RI& q, const RI& p1, const RI& q1, const Rational& s, Dimension d) {
  const std::string id = "wiener-to-modulation";
  if (!p_less_equal(p, p1)) return index_failure(id, "index: p <= p1", FamilyKind::ScaledBump);
  const Rational m = min(p.u(), q.u());
  if (q1.u() <= m) return settle(id, Side::AtMost, s, {"(1)", kZero, false, FamilyKind::ModulatedBump});
  const FamilyKind hint = p.u() <= q.u() ? FamilyKind::SpreadTranslates : FamilyKind::UniformLacunary;
  return settle(id, Side::AtMost, s, {"(2)", dim(d) * (m - q1.u()), true, hint});
}

Verdict alpha_to_wiener(const RI& p, const RI& q, const Rational& s, const AlphaParam& alpha, Dimension d,
                        AlphaThresholdReading reading) {
  const std::string id = "alpha-modulation-to-wiener";
  const Rational& a = alpha.value;
  if (p.u() <= q.u()) {
    return settle(id, Side::AtLeast, s, {"(1)", a * tau1(p, q, d), false, alpha_piece_hint(tau1_piece(p, q))});
  }
  const Rational base = reading == AlphaThresholdReading::AsWrittenTau ? tau(p, q, d) : tau1(p, q, d);
  const Rational t = a * base + dim(d) * (kOne - a) * (p.u() - q.u());
  return settle(id, Side::AtLeast, s, {"(2)", t, true, FamilyKind::AlphaCenterTranslates});
}

Verdict wiener_to_alpha(const RI& p, const RI& q, const Rational& s, const AlphaParam& alpha, Dimension d) {
  const std::string id = "wiener-to-alpha-modulation";
  const Rational& a = alpha.value;
  if (p.u() >= q.u()) {
    return settle(id, Side::AtMost, s, {"(1)", a * sigma1(p, q, d), false, alpha_piece_hint(sigma1_piece(p, q))});
  }
  const Rational t = a * sigma1(p, q, d) + dim(d) * (kOne - a) * (p.u() - q.u());
  return settle(id, Side::AtMost, s, {"(2)", t, true, FamilyKind::AlphaCenterTranslates});
}

Verdict triebel_to_wiener(const RI& p, const RI& q, const Rational& s, Dimension d) {
  const std::string id = "triebel-to-wiener";
  if (p.u() < kOne) return outside(id, "needs 0 < p <= 1");
  const Rational t = dim(d) * (p.u() + q.u() - kOne);
  if (p.u() >= q.u()) return settle(id, Side::AtLeast, s, {"(1)", t, false, FamilyKind::DyadicShellSum});
  return settle(id, Side::AtLeast, s, {"(2)", t, true, FamilyKind::DyadicShellSum});
}

Verdict wiener_to_triebel(const RI& p, const RI& q, const RI& r, const Rational& s) {
  const std::string id = "wiener-to-triebel";
  if (p.u() < kOne) return outside(id, "needs 0 < p <= 1");
  if (q.u() < kHalf) return open_in_paper(id, "remark: q > 2 is conjectured, not proved");
  const bool q_le_r = q.u() >= r.u();
  const std::string label = p.u() <= q.u() ? (q_le_r ? "(1)" : "(2)") : (q_le_r ? "(3)" : "(4)");
  const FamilyKind hint = q_le_r ? FamilyKind::ModulatedBump : FamilyKind::UniformLacunary;
  return settle(id, Side::AtMost, s, {label, kZero, !q_le_r, hint});
}

void validate(const SpaceSpec& space) {
  if (space.family == SpaceFamily::LocalHardy && space.p.is_infinite()) {
    throw Error(ErrorKind::MalformedQuery, "local Hardy space needs r < inf");
  }
  if (space.family == SpaceFamily::AlphaModulation) {
    if (!space.alpha) throw Error(ErrorKind::MalformedQuery, "alpha-modulation space without alpha");
    if (*space.alpha <= kZero || *space.alpha >= kOne) {
      throw Error(ErrorKind::MalformedQuery, "alpha must lie in (0,1)");
    }
  }
}

[[noreturn]] void unsupported(const EmbeddingQuery& q) {
  throw Error(ErrorKind::UnsupportedPair,
              std::string("no decision procedure for ") + to_string(q.src.family) + " -> " + to_string(q.dst.family));
}

bool same_pq(const SpaceSpec& a, const SpaceSpec& b) { return a.p == b.p && a.q == b.q; }

}  // namespace

}  // namespace detail

Verdict decide(const EmbeddingQuery& query) {
  using namespace detail;
  using F = SpaceFamily;
  const SpaceSpec& a = query.src;
  const SpaceSpec& b = query.dst;
  validate(a);
  validate(b);
  const Dimension d = query.d;
  const Rational s = a.s - b.s;  // source-weighted theorems test s; target-weighted ones test -s

  switch (a.family) {
    case F::Sobolev:
      if (b.family == F::Wiener) return sobolev_to_wiener("sobolev-to-wiener", a.p, b.p, b.q, s, d);
      break;
    case F::LocalHardy:
      if (b.family == F::Wiener) return hardy_to_wiener("hardy-to-wiener", a.p, b.p, b.q, s, d);
      break;
    case F::Besov:
      if (b.family == F::Wiener) {
        if (a.q == b.q) return besov_p0_to_wiener("besov-p0-to-wiener", a.p, a.q, b.p, s, d);
        if (a.p == b.p) return besov_q0_to_wiener(a.p, a.q, b.q, s, d);
        return outside("besov-to-wiener", "needs a shared p or a shared q");
      }
      if (b.family == F::Modulation) {
        if (!same_pq(a, b)) return outside("external-sharp:besov-to-modulation", "needs equal p and q");
        return lemmas::besov_to_modulation_same(a.p, a.q, s, d);
      }
      if (b.family == F::AlphaModulation) {
        if (!same_pq(a, b)) return outside("external-sharp:besov-to-alpha-modulation", "needs equal p and q");
        return lemmas::besov_to_alpha(a.p, a.q, s, AlphaParam(*b.alpha), d);
      }
      break;
    case F::Triebel:
      if (b.family == F::Wiener) {
        if (a.p != b.p) return outside("triebel-to-wiener", "needs equal p");
        return triebel_to_wiener(b.p, b.q, s, d);
      }
      if (b.family == F::Modulation) {
        if (a.p != b.p) return outside("external-sharp:triebel-to-modulation", "needs equal p");
        return lemmas::triebel_to_modulation(b.p, b.q, a.q, s, d);
      }
      break;
    case F::Modulation:
      if (b.family == F::Wiener) return modulation_to_wiener(a.p, a.q, b.p, b.q, s, d);
      if (b.family == F::AlphaModulation) {
        if (!same_pq(a, b)) return outside("external-sharp:modulation-to-alpha-modulation", "needs equal p and q");
        return lemmas::modulation_to_alpha(a.p, a.q, -s, AlphaParam(*b.alpha), d);
      }
      if (b.family == F::Triebel) {
        if (a.p != b.p) return outside("external-sharp:modulation-to-triebel", "needs equal p");
        return lemmas::modulation_to_triebel(a.p, a.q, b.q, -s, d);
      }
      break;
    case F::AlphaModulation:
      if (b.family == F::Wiener) {
        if (!same_pq(a, b)) return outside("alpha-modulation-to-wiener", "needs equal p and q");
        return alpha_to_wiener(a.p, a.q, s, AlphaParam(*a.alpha), d, query.options.alpha_reading);
      }
      if (b.family == F::Modulation) {
        if (!same_pq(a, b)) return outside("external-sharp:alpha-modulation-to-modulation", "needs equal p and q");
        return lemmas::alpha_to_modulation(a.p, a.q, s, AlphaParam(*a.alpha), d);
      }
      if (b.family == F::Besov) {
        if (!same_pq(a, b)) return outside("external-sharp:alpha-modulation-to-besov", "needs equal p and q");
        return lemmas::alpha_to_besov(a.p, a.q, -s, AlphaParam(*a.alpha), d);
      }
      break;
    case F::Wiener:
      switch (b.family) {
        case F::Sobolev: return wiener_to_sobolev("wiener-to-sobolev", a.p, a.q, b.p, -s, d);
        case F::LocalHardy: return wiener_to_hardy("wiener-to-hardy", a.p, a.q, b.p, -s, d);
        case F::Besov:
          if (a.q == b.q) return wiener_to_besov_p0("wiener-to-besov-p0", a.p, a.q, b.p, -s, d);
          if (a.p == b.p) return wiener_to_besov_q0(a.p, a.q, b.q, -s, d);
          return outside("wiener-to-besov", "needs a shared p or a shared q");
        case F::Modulation: return wiener_to_modulation(a.p, a.q, b.p, b.q, -s, d);
        case F::AlphaModulation:
          if (!same_pq(a, b)) return outside("wiener-to-alpha-modulation", "needs equal p and q");
          return wiener_to_alpha(a.p, a.q, -s, AlphaParam(*b.alpha), d);
        case F::Triebel:
          if (a.p != b.p) return outside("wiener-to-triebel", "needs equal p");
          return wiener_to_triebel(a.p, a.q, b.q, -s);
        default: break;
      }
      break;
    case F::SeqWeighted0:
      if (b.family == F::SeqWeighted0) return decide_sequence_l0(a.q, a.s, b.q, b.s, d);
      break;
    case F::SeqWeighted1:
      if (b.family == F::SeqWeighted1) return decide_sequence_l1(a.q, a.s, b.q, b.s);
      break;
  }
  unsupported(query);
}

Verdict decide_sequence_l0(const ReciprocalIndex& q1, const Rational& s1, const ReciprocalIndex& q2,
                           const Rational& s2, Dimension d) {
  using namespace detail;
  const std::string id = "sequence-l0";
  const Rational gap = s1 - s2;
  if (q1.u() >= q2.u()) return settle(id, Side::AtLeast, gap, {"(1)", Rational(0), false, FamilyKind::ModulatedBump});
  const Rational t = Rational(d.value) * (q2.u() - q1.u());
  return settle(id, Side::AtLeast, gap, {"(2)", t, true, FamilyKind::UniformLacunary});
}

Verdict decide_sequence_l1(const ReciprocalIndex& q1, const Rational& s1, const ReciprocalIndex& q2,
                           const Rational& s2) {
  using namespace detail;
  const std::string id = "sequence-l1";
  const Rational gap = s1 - s2;
  if (q1.u() >= q2.u()) return settle(id, Side::AtLeast, gap, {"(1)", Rational(0), false, FamilyKind::ModulatedBump});
  return settle(id, Side::AtLeast, gap, {"(2)", Rational(0), true, FamilyKind::DyadicShellSum});
}

EmbeddingQuery dualize_query(const EmbeddingQuery& query) {
  auto check = [](const ReciprocalIndex& x) {
    if (x.u() <= Rational(0) || x.u() >= Rational(1)) {
      throw Error(ErrorKind::OutOfDualityRange, "exponent " + x.to_string() + " is not inside (1, inf)");
    }
  };
  auto dual = [&](const SpaceSpec& sp) {
    SpaceSpec out = sp;
    if (sp.has_p()) {
      check(sp.p);
      out.p = dual_index(sp.p);
    }
    if (sp.has_q()) {
      check(sp.q);
      out.q = dual_index(sp.q);
    }
    out.s = -sp.s;
    return out;
  };
  EmbeddingQuery out = query;
  out.src = dual(query.dst);
  out.dst = dual(query.src);
  return out;
}

}  // namespace amalgam
