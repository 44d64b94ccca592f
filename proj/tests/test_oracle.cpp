#include <doctest.h>

#include <string>
#include <vector>

#include "amalgam/error.hpp"
#include "amalgam/lemmas.hpp"
#include "amalgam/oracle.hpp"

using namespace amalgam;
using RI = ReciprocalIndex;
using namespace amalgam::lemmas;

namespace {

std::vector<Rational> lattice(int lo, int hi, int den) {
  std::vector<Rational> out;
  for (int i = lo; i <= hi; ++i) out.emplace_back(i, den);
  return out;
}

Verdict ask(const SpaceSpec& src, const SpaceSpec& dst, int d = 1) {
  return decide(EmbeddingQuery{src, dst, Dimension(d), {}});
}

// Sobolev L^{s,r} -> W_{p,q}, written out from the iff-statement with
// reciprocals ur = 1/r, up = 1/p, uq = 1/q.
bool sobolev_reference(const Rational& ur, const Rational& up, const Rational& uq, const Rational& s, int d) {
  if (ur < up) return false;  // needs r <= p
  const Rational t = tau1(RI(ur), RI(uq), Dimension(d));
  const Rational half(1, 2), one(1);
  if (ur < uq && uq > half && s > t) return true;
  if (ur < one && max(half, ur) >= uq && s >= t) return true;
  if (ur == one && uq.is_zero() && s >= t) return true;
  if (ur == one && !uq.is_zero() && s > t) return true;
  return false;
}

// B^s_{p,q0} -> W_{p,q}; returns nullopt outside the stated hypothesis.
std::optional<bool> besov_q0_reference(const Rational& up, const Rational& uq0, const Rational& uq, const Rational& s,
                                       int d) {
  const Rational half(1, 2);
  const bool hypothesis = uq <= max(uq0, half) || up >= min(uq0, half);
  if (!hypothesis) return std::nullopt;
  const Rational t = tau1(RI(up), RI(uq), Dimension(d));
  if (uq0 >= max(up, uq) && s >= t) return true;
  if (up > uq0 && uq0 >= uq && s > t) return true;
  if (uq > uq0 && s > t) return true;
  return false;
}

}  // namespace

TEST_CASE("sobolev to wiener agrees with the written conditions") {
  int checked = 0;
  for (int d : {1, 2}) {
    for (const auto& ur : lattice(0, 4, 4)) {
      for (const auto& up : lattice(0, 4, 4)) {
        for (const auto& uq : lattice(0, 8, 4)) {
          const Rational t = tau1(RI(ur), RI(uq), Dimension(d));
          for (const Rational& s : {t - Rational(1, 4), t, t + Rational(1, 4)}) {
            const auto v = ask(SpaceSpec::sobolev(RI(ur), s), SpaceSpec::wiener(RI(up), RI(uq)), d);
            const bool expect = sobolev_reference(ur, up, uq, s, d);
            INFO("r=", RI(ur).to_string(), " p=", RI(up).to_string(), " q=", RI(uq).to_string(), " s=", s.to_string());
            CHECK(v.theorem_id == "sobolev-to-wiener");
            CHECK(v.status == (expect ? Status::Holds : Status::Fails));
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked == 2 * 5 * 5 * 9 * 3);
}

TEST_CASE("besov with fixed p agrees with the written conditions") {
  int open = 0;
  for (const auto& up : lattice(0, 8, 4)) {
    for (const auto& uq0 : lattice(0, 8, 4)) {
      for (const auto& uq : lattice(0, 8, 4)) {
        if (uq == uq0) continue;  // same q is the other Besov theorem
        const Rational t = tau1(RI(up), RI(uq), Dimension(1));
        for (const Rational& s : {t - Rational(1, 8), t, t + Rational(1, 8)}) {
          const auto v = ask(SpaceSpec::besov(RI(up), RI(uq0), s), SpaceSpec::wiener(RI(up), RI(uq)));
          const auto expect = besov_q0_reference(up, uq0, uq, s, 1);
          INFO("p=", RI(up).to_string(), " q0=", RI(uq0).to_string(), " q=", RI(uq).to_string(), " s=", s.to_string());
          CHECK(v.theorem_id == "besov-q0-to-wiener");
          if (!expect) {
            CHECK(v.status == Status::OpenInPaper);
            ++open;
          } else {
            CHECK(v.status == (*expect ? Status::Holds : Status::Fails));
          }
        }
      }
    }
  }
  CHECK(open > 0);
}

TEST_CASE("modulation to wiener examples") {
  const auto holds = ask(SpaceSpec::parse("M[p=1,q=1,s=0]"), SpaceSpec::parse("W[p=2,q=2]"));
  CHECK(holds.status == Status::Holds);
  CHECK(holds.theorem_id == "modulation-to-wiener");

  // 1/q1 = 1/4 < 1/2 = 1/(p ∧ q): the q-index condition fails
  const auto fails = ask(SpaceSpec::parse("M[p=2,q=4,s=0]"), SpaceSpec::parse("W[p=2,q=2]"));
  CHECK(fails.status == Status::Fails);
  CHECK_FALSE(fails.clause.empty());
}

TEST_CASE("only the weight difference matters") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"L[r=2,s=1]", "W[p=2,q=1,s=1/2]"},
      {"B[p=1,q=2,s=1]", "W[p=1,q=1,s=0]"},
      {"W[p=2,q=1,s=1]", "M[p=2,q=2,s=3/4]"},
      {"h[r=1/2,s=2]", "W[p=1,q=1/2,s=1/4]"},
  };
  for (const auto& [a, b] : pairs) {
    auto src = SpaceSpec::parse(a), dst = SpaceSpec::parse(b);
    const auto base = ask(src, dst);
    src.s += Rational(5, 3);
    dst.s += Rational(5, 3);
    const auto shifted = ask(src, dst);
    CHECK(base == shifted);
  }
}

TEST_CASE("s-monotone along a sobolev line") {
  // Once Holds, stays Holds as the source weight increases.
  bool seen_holds = false;
  for (const auto& s : lattice(-16, 16, 8)) {
    const auto v = ask(SpaceSpec::sobolev(RI::parse("3/2"), s), SpaceSpec::wiener(RI::parse("2"), RI::parse("1/2")));
    if (seen_holds) CHECK(v.status == Status::Holds);
    seen_holds = seen_holds || v.status == Status::Holds;
  }
  CHECK(seen_holds);
}

TEST_CASE("boundary kinds at the threshold") {
  // L^{s,2} -> W_{2,1}: clause with strict s > tau1 = 1/2
  auto v = ask(SpaceSpec::parse("L[r=2,s=1/2]"), SpaceSpec::parse("W[p=2,q=1]"));
  CHECK(v.status == Status::Fails);
  CHECK(v.boundary == BoundaryKind::StrictBoundaryExcluded);
  REQUIRE(v.threshold);
  CHECK(*v.threshold == Rational(1, 2));
  CHECK(v.strict);

  // L^{s,2} -> W_{2,2}: non-strict s >= 0
  v = ask(SpaceSpec::parse("L[r=2,s=0]"), SpaceSpec::parse("W[p=2,q=2]"));
  CHECK(v.status == Status::Holds);
  CHECK(v.boundary == BoundaryKind::NonStrictBoundary);
  CHECK_FALSE(v.strict);

  v = ask(SpaceSpec::parse("L[r=2,s=1]"), SpaceSpec::parse("W[p=2,q=2]"));
  CHECK(v.boundary == BoundaryKind::Interior);
}

TEST_CASE("failing verdicts on a strict boundary suggest a probe") {
  const auto v = ask(SpaceSpec::parse("L[r=2,s=1/2]"), SpaceSpec::parse("W[p=2,q=1]"));
  CHECK(v.probe_hint.has_value());
}

TEST_CASE("target-weighted theorems see the weight with the right sign") {
  // W_{p,q} -> L^{s,r} with s = sigma1 is the non-strict edge for q = r = 2.
  auto v = ask(SpaceSpec::parse("W[p=2,q=2]"), SpaceSpec::parse("L[r=2,s=0]"));
  CHECK(v.status == Status::Holds);
  v = ask(SpaceSpec::parse("W[p=2,q=2]"), SpaceSpec::parse("L[r=2,s=1/4]"));
  CHECK(v.status == Status::Fails);
  v = ask(SpaceSpec::parse("W[p=2,q=2,s=1/4]"), SpaceSpec::parse("L[r=2,s=0]"));
  CHECK(v.status == Status::Holds);
}

TEST_CASE("sequence spaces") {
  // l^{s,0}_{q1} -> l^{0,0}_{q2} with q1 <= q2 holds at s = 0
  auto v = ask(SpaceSpec::parse("l0[q=1]"), SpaceSpec::parse("l0[q=2]"));
  CHECK(v.theorem_id == "sequence-l0");
  CHECK(v.status == Status::Holds);
  // q1 > q2 needs s > d (1/q2 - 1/q1) = 1/2 in d = 1
  v = ask(SpaceSpec::parse("l0[q=2,s=1/2]"), SpaceSpec::parse("l0[q=1]"));
  CHECK(v.status == Status::Fails);
  v = ask(SpaceSpec::parse("l0[q=2,s=3/4]"), SpaceSpec::parse("l0[q=1]"));
  CHECK(v.status == Status::Holds);
  v = ask(SpaceSpec::parse("l1[q=2,s=1/4]"), SpaceSpec::parse("l1[q=1]"));
  CHECK(v.theorem_id == "sequence-l1");
}

TEST_CASE("unsupported and malformed queries throw") {
  try {
    (void)ask(SpaceSpec::parse("L[r=2]"), SpaceSpec::parse("B[p=2,q=2]"));
    FAIL("expected UnsupportedPair");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedPair);
  }
  CHECK_THROWS_AS(ask(SpaceSpec::parse("h[r=inf]"), SpaceSpec::parse("W[p=2,q=2]")), Error);
}

TEST_CASE("space spec text round trip") {
  for (const char* text : {"W[p=2,q=1/2,s=-3/4]", "B[p=1,q=2,s=1]", "Ma[p=2,q=2,s=0,alpha=1/3]", "L[r=2,s=1]",
                           "h[r=1/2]", "F[p=1,q=2]", "M[p=1,q=inf]", "l0[q=2,s=1]", "l1[q=inf]"}) {
    const auto spec = SpaceSpec::parse(text);
    CHECK(SpaceSpec::parse(spec.to_string()) == spec);
  }
  CHECK_THROWS_AS(SpaceSpec::parse("W[p=2]"), Error);
  CHECK_THROWS_AS(SpaceSpec::parse("W[p=0.5,q=1]"), Error);
  CHECK_THROWS_AS(SpaceSpec::parse("Z[p=1,q=1]"), Error);
  CHECK_THROWS_AS(SpaceSpec::parse("Ma[p=2,q=2]"), Error);
}

TEST_CASE("auxiliary lemmas at a few hand-checked points") {
  const Dimension d1(1);
  // B^s_{p,q} -> W_{p,q}, p = 1, q = 2: tau1 = max(0, 0, 1/2) = 1/2, strict since p < q
  auto v = besov_to_wiener_same(RI::parse("1"), RI::parse("2"), Rational(1, 2), d1);
  CHECK(v.status == Status::Fails);
  v = besov_to_wiener_same(RI::parse("1"), RI::parse("2"), Rational(3, 4), d1);
  CHECK(v.status == Status::Holds);
  // p = 2, q = 1: tau1 = 1/2, p > q so not strict
  v = besov_to_wiener_same(RI::parse("2"), RI::parse("1"), Rational(1, 2), d1);
  CHECK(v.status == Status::Holds);
  // M_{p,q} <-> W_{p,q}
  CHECK(modulation_wiener_same(RI::parse("2"), RI::parse("1"), true).status == Status::Holds);
  CHECK(modulation_wiener_same(RI::parse("1"), RI::parse("2"), false).status == Status::Holds);
}

TEST_CASE("worked examples") {
  auto v = ask(SpaceSpec::parse("L[r=2]"), SpaceSpec::parse("W[p=2,q=2]"));
  CHECK(v.status == Status::Holds);
  CHECK(v.clause == "(2)");

  v = ask(SpaceSpec::parse("M[p=1,q=1]"), SpaceSpec::parse("W[p=2,q=2]"));
  CHECK(v.clause == "(1)");

  // needs s + 1/4 > 1/2
  v = ask(SpaceSpec::parse("M[p=2,q=4]"), SpaceSpec::parse("W[p=2,q=2]"));
  CHECK(v.status == Status::Fails);
  CHECK(v.probe_hint == FamilyKind::SpreadTranslates);

  // q < q0 ∧ 2 and p > q0 ∨ 2
  v = ask(SpaceSpec::parse("B[p=8,q=4,s=1]"), SpaceSpec::parse("W[p=8,q=1]"));
  CHECK(v.status == Status::OpenInPaper);

  const Dimension d1(1);
  CHECK(decide_sequence_l0(RI::parse("2"), Rational(1), RI::parse("4"), Rational(0), d1).status == Status::Holds);
  CHECK(decide_sequence_l0(RI::parse("4"), Rational(0), RI::parse("2"), Rational(0), d1).status == Status::Fails);
  CHECK(decide_sequence_l0(RI::parse("1/2"), Rational(3), RI::parse("1/2"), Rational(3), Dimension(2)).status ==
        Status::Holds);
  CHECK(decide_sequence_l1(RI::parse("inf"), Rational(1, 8), RI::parse("1"), Rational(0)).status == Status::Holds);
  CHECK(decide_sequence_l1(RI::parse("inf"), Rational(0), RI::parse("1"), Rational(0)).status == Status::Fails);
}
