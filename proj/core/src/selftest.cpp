#include "amalgam/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "amalgam/banks.hpp"
#include "amalgam/error.hpp"
#include "amalgam/fft.hpp"
#include "amalgam/generators.hpp"
#include "amalgam/lemmas.hpp"
#include "amalgam/norms.hpp"
#include "amalgam/probes.hpp"
#include "amalgam/regions.hpp"
#include "amalgam/transforms.hpp"

namespace amalgam {

namespace {

using RI = ReciprocalIndex;

std::vector<Rational> lattice(int steps_per_unit, bool interior_only) {
  std::vector<Rational> out;
  if (interior_only) {
    for (int i = 1; i < steps_per_unit; ++i) out.emplace_back(i, steps_per_unit);
  } else {
    for (int i = 0; i <= 2 * steps_per_unit; ++i) out.emplace_back(i, steps_per_unit);
  }
  return out;
}

std::vector<Rational> weights() {
  std::vector<Rational> out;
  for (int i = -8; i <= 8; ++i) out.emplace_back(i, 4);
  return out;
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream out;
  out.precision(precision);
  out << v;
  return out.str();
}

// "Holds", "Fails", ... or "error:<kind>" for thrown queries.
std::string outcome(const SpaceSpec& src, const SpaceSpec& dst, int d) {
  try {
    return to_string(decide(EmbeddingQuery{src, dst, Dimension{d}}).status);
  } catch (const Error& e) {
    return std::string("error:") + to_string(e.kind());
  }
}

using SpaceMaker = std::function<SpaceSpec(const std::vector<RI>&, const Rational& s)>;

struct Pattern {
  const char* name;
  int free;  // number of free exponents
  SpaceMaker src;
  SpaceMaker dst;
};

std::vector<Pattern> monotone_patterns() {
  using V = std::vector<RI>;
  const Rational a1(1, 4), a2(1, 2), a3(3, 4);
  return {
      {"sobolev-to-wiener", 3, [](const V& e, const Rational& s) { return SpaceSpec::sobolev(e[0], s); },
       [](const V& e, const Rational&) { return SpaceSpec::wiener(e[1], e[2]); }},
      {"wiener-to-sobolev", 3, [](const V& e, const Rational& s) { return SpaceSpec::wiener(e[1], e[2], s); },
       [](const V& e, const Rational&) { return SpaceSpec::sobolev(e[0]); }},
      {"hardy-to-wiener", 3, [](const V& e, const Rational& s) { return SpaceSpec::local_hardy(e[0], s); },
       [](const V& e, const Rational&) { return SpaceSpec::wiener(e[1], e[2]); }},
      {"wiener-to-hardy", 3, [](const V& e, const Rational& s) { return SpaceSpec::wiener(e[1], e[2], s); },
       [](const V& e, const Rational&) { return SpaceSpec::local_hardy(e[0]); }},
      {"besov-p0-to-wiener", 3, [](const V& e, const Rational& s) { return SpaceSpec::besov(e[0], e[2], s); },
       [](const V& e, const Rational&) { return SpaceSpec::wiener(e[1], e[2]); }},
      {"wiener-to-besov-p0", 3, [](const V& e, const Rational& s) { return SpaceSpec::wiener(e[1], e[2], s); },
       [](const V& e, const Rational&) { return SpaceSpec::besov(e[0], e[2]); }},
      {"besov-q0-to-wiener", 3, [](const V& e, const Rational& s) { return SpaceSpec::besov(e[1], e[0], s); },
       [](const V& e, const Rational&) { return SpaceSpec::wiener(e[1], e[2]); }},
      {"wiener-to-besov-q0", 3, [](const V& e, const Rational& s) { return SpaceSpec::wiener(e[1], e[2], s); },
       [](const V& e, const Rational&) { return SpaceSpec::besov(e[1], e[0]); }},
      {"modulation-to-wiener", 4, [](const V& e, const Rational& s) { return SpaceSpec::modulation(e[2], e[3], s); },
       [](const V& e, const Rational&) { return SpaceSpec::wiener(e[0], e[1]); }},
      {"wiener-to-modulation", 4, [](const V& e, const Rational& s) { return SpaceSpec::wiener(e[0], e[1], s); },
       [](const V& e, const Rational&) { return SpaceSpec::modulation(e[2], e[3]); }},
      {"alpha-modulation-to-wiener", 2,
       [a1](const V& e, const Rational& s) { return SpaceSpec::alpha_modulation(e[0], e[1], s, a1); },
       [](const V& e, const Rational&) { return SpaceSpec::wiener(e[0], e[1]); }},
      {"alpha-modulation-to-wiener", 2,
       [a3](const V& e, const Rational& s) { return SpaceSpec::alpha_modulation(e[0], e[1], s, a3); },
       [](const V& e, const Rational&) { return SpaceSpec::wiener(e[0], e[1]); }},
      {"wiener-to-alpha-modulation", 2, [](const V& e, const Rational& s) { return SpaceSpec::wiener(e[0], e[1], s); },
       [a2](const V& e, const Rational&) { return SpaceSpec::alpha_modulation(e[0], e[1], Rational(0), a2); }},
      {"triebel-to-wiener", 3, [](const V& e, const Rational& s) { return SpaceSpec::triebel(e[0], e[1], s); },
       [](const V& e, const Rational&) { return SpaceSpec::wiener(e[0], e[2]); }},
      {"wiener-to-triebel", 3, [](const V& e, const Rational& s) { return SpaceSpec::wiener(e[0], e[2], s); },
       [](const V& e, const Rational&) { return SpaceSpec::triebel(e[0], e[1]); }},
      {"besov-to-modulation", 2, [](const V& e, const Rational& s) { return SpaceSpec::besov(e[0], e[1], s); },
       [](const V& e, const Rational&) { return SpaceSpec::modulation(e[0], e[1]); }},
      {"alpha-modulation-to-modulation", 2,
       [a2](const V& e, const Rational& s) { return SpaceSpec::alpha_modulation(e[0], e[1], s, a2); },
       [](const V& e, const Rational&) { return SpaceSpec::modulation(e[0], e[1]); }},
      {"modulation-to-alpha-modulation", 2,
       [](const V& e, const Rational& s) { return SpaceSpec::modulation(e[0], e[1], s); },
       [a2](const V& e, const Rational&) { return SpaceSpec::alpha_modulation(e[0], e[1], Rational(0), a2); }},
      {"sequence-l0", 2, [](const V& e, const Rational& s) { return SpaceSpec::seq0(e[0], s); },
       [](const V& e, const Rational&) { return SpaceSpec::seq0(e[1]); }},
      {"sequence-l1", 2, [](const V& e, const Rational& s) { return SpaceSpec::seq1(e[0], s); },
       [](const V& e, const Rational&) { return SpaceSpec::seq1(e[1]); }},
  };
}

// Calls f on every tuple of `count` exponents drawn from `values`.
void for_each_tuple(const std::vector<RI>& values, int count, const std::function<void(const std::vector<RI>&)>& f) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(count), 0);
  std::vector<RI> tuple(static_cast<std::size_t>(count));
  while (true) {
    for (int i = 0; i < count; ++i) tuple[i] = values[idx[i]];
    f(tuple);
    int k = count - 1;
    while (k >= 0 && ++idx[k] == values.size()) idx[k--] = 0;
    if (k < 0) return;
  }
}

std::vector<RI> exponents(const std::vector<Rational>& us) {
  std::vector<RI> out;
  for (const auto& u : us) out.emplace_back(u);
  return out;
}

CriterionResult clause_fidelity() {
  CriterionResult r;
  int bad = 0;
  std::map<std::string, int> groups;
  std::string first;
  for (const auto& c : audited_cases()) {
    ++groups[c.group];
    const auto v = decide(EmbeddingQuery{SpaceSpec::parse(c.src), SpaceSpec::parse(c.dst), Dimension{c.d}});
    const bool ok = v.status == c.status && v.theorem_id == c.theorem && v.boundary == c.boundary &&
                    (c.clause[0] == '\0' || v.clause == c.clause);
    if (!ok) {
      ++bad;
      if (first.empty()) first = std::string(c.src) + " -> " + c.dst;
    }
  }
  int smallest = 1 << 30;
  for (const auto& [g, n] : groups) smallest = std::min(smallest, n);
  r.pass = bad == 0 && audited_cases().size() >= 40 && smallest >= 10;
  r.detail = std::to_string(audited_cases().size()) + " cases in " + std::to_string(groups.size()) +
             " groups (smallest " + std::to_string(smallest) + "), " + std::to_string(bad) + " mismatches";
  if (!first.empty()) r.detail += "; first: " + first;
  return r;
}

CriterionResult monotonicity(bool quick) {
  const auto values = exponents(lattice(quick ? 4 : 8, false));
  const auto ss = weights();
  long checked = 0, violations = 0;
  std::string first;
  for (const auto& pattern : monotone_patterns()) {
    for (int d : {1, 2}) {
      if (quick && d == 2) continue;
      for_each_tuple(values, pattern.free, [&](const std::vector<RI>& e) {
        std::vector<std::string> seq;
        seq.reserve(ss.size());
        for (const auto& s : ss) seq.push_back(outcome(pattern.src(e, s), pattern.dst(e, s), d));
        ++checked;
        bool seen_holds = false, bad = false;
        for (std::size_t i = 0; i < seq.size(); ++i) {
          const bool decisive = seq[i] == "Holds" || seq[i] == "Fails";
          const bool first_decisive = seq[0] == "Holds" || seq[0] == "Fails";
          if (decisive != first_decisive || (!decisive && seq[i] != seq[0])) bad = true;
          if (seq[i] == "Holds") seen_holds = true;
          if (seq[i] == "Fails" && seen_holds) bad = true;
        }
        if (bad) {
          ++violations;
          if (first.empty()) first = pattern.src(e, ss.front()).to_string() + " -> " + pattern.dst(e, ss.front()).to_string();
        }
      });
    }
  }
  CriterionResult r;
  r.pass = violations == 0;
  r.detail = std::to_string(checked) + " index tuples x " + std::to_string(ss.size()) + " weights, " +
             std::to_string(violations) + " violations";
  if (!first.empty()) r.detail += "; first: " + first;
  return r;
}

CriterionResult duality(bool quick) {
  const auto values = exponents(lattice(quick ? 4 : 8, true));
  const auto ss = weights();
  const auto patterns = monotone_patterns();
  const std::vector<std::string> dual_ids = {"sobolev-to-wiener",  "wiener-to-sobolev",    "hardy-to-wiener",
                                             "wiener-to-hardy",    "besov-p0-to-wiener",   "wiener-to-besov-p0",
                                             "modulation-to-wiener", "wiener-to-modulation"};
  long checked = 0, disagreements = 0;
  std::string first;
  for (const auto& pattern : patterns) {
    if (std::find(dual_ids.begin(), dual_ids.end(), pattern.name) == dual_ids.end()) continue;
    for (int d : {1, 2}) {
      if (quick && d == 2) continue;
      for_each_tuple(values, pattern.free, [&](const std::vector<RI>& e) {
        for (const auto& s : ss) {
          const EmbeddingQuery q{pattern.src(e, s), pattern.dst(e, s), Dimension{d}};
          const auto a = decide(q).status;
          const auto b = decide(dualize_query(q)).status;
          ++checked;
          if (a != b) {
            ++disagreements;
            if (first.empty()) first = q.src.to_string() + " -> " + q.dst.to_string();
          }
        }
      });
    }
  }
  CriterionResult r;
  r.pass = disagreements == 0 && checked > 0;
  r.detail = std::to_string(checked) + " interior queries, " + std::to_string(disagreements) + " disagreements";
  if (!first.empty()) r.detail += "; first: " + first;
  return r;
}

CriterionResult specialization(bool quick) {
  const auto values = exponents(lattice(quick ? 4 : 8, false));
  const auto ss = weights();
  long checked = 0, bad = 0;
  std::string first;
  auto note = [&](bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++bad;
      if (first.empty()) first = what;
    }
  };
  for (int d : {1, 2}) {
    const Dimension dim{d};
    for (const auto& p : values) {
      for (const auto& q : values) {
        for (const auto& s : ss) {
          // Besov into Wiener with p0 = p against the same-index characterization.
          const auto main = decide(EmbeddingQuery{SpaceSpec::besov(p, q, s), SpaceSpec::wiener(p, q), dim});
          const auto aux = lemmas::besov_to_wiener_same(p, q, s, dim);
          note(main.status == aux.status, "besov p0=p at p=" + p.to_string() + ",q=" + q.to_string());
          const auto main_w = decide(EmbeddingQuery{SpaceSpec::wiener(p, q, s), SpaceSpec::besov(p, q), dim});
          const auto aux_w = lemmas::wiener_to_besov_same(p, q, -s, dim);
          note(main_w.status == aux_w.status, "wiener into besov at p=" + p.to_string() + ",q=" + q.to_string());
          // Sobolev and local Hardy at r = p against the same-index characterizations.
          if (p.u() <= Rational(1)) {
            const auto l = decide(EmbeddingQuery{SpaceSpec::sobolev(p, s), SpaceSpec::wiener(p, q), dim});
            note(l.status == lemmas::sobolev_to_wiener_same_p(p, q, s, dim).status,
                 "sobolev r=p at p=" + p.to_string() + ",q=" + q.to_string());
          }
          if (!p.is_infinite()) {
            const auto h = decide(EmbeddingQuery{SpaceSpec::local_hardy(p, s), SpaceSpec::wiener(p, q), dim});
            note(h.status == lemmas::hardy_to_wiener_same_p(p, q, s, dim).status,
                 "hardy r=p at p=" + p.to_string() + ",q=" + q.to_string());
            const auto w = decide(EmbeddingQuery{SpaceSpec::wiener(p, q, s), SpaceSpec::local_hardy(p), dim});
            note(w.status == lemmas::wiener_to_hardy_same_p(p, q, -s, dim).status,
                 "wiener into hardy at p=" + p.to_string() + ",q=" + q.to_string());
          }
          // Triebel with inner index 2 against local Hardy at r = p, p <= 1.
          if (p.u() >= Rational(1)) {
            const auto f = decide(EmbeddingQuery{SpaceSpec::triebel(p, RI(Rational(1, 2)), s), SpaceSpec::wiener(p, q), dim});
            const auto h = decide(EmbeddingQuery{SpaceSpec::local_hardy(p, s), SpaceSpec::wiener(p, q), dim});
            note(f.status == h.status, "triebel r=2 vs hardy at p=" + p.to_string() + ",q=" + q.to_string());
          }
        }
        // Modulation into Wiener at equal indices, p >= q, s = 0.
        if (p.u() <= q.u()) {
          const auto v = decide(EmbeddingQuery{SpaceSpec::modulation(p, q), SpaceSpec::wiener(p, q), dim});
          note(v.status == Status::Holds, "modulation into wiener at p=" + p.to_string() + ",q=" + q.to_string());
        }
      }
    }
  }
  CriterionResult r;
  r.pass = bad == 0;
  r.detail = std::to_string(checked) + " comparisons, " + std::to_string(bad) + " disagreements";
  if (!first.empty()) r.detail += "; first: " + first;
  return r;
}

GridSpec standard_grid() { return GridSpec{}; }

double partition_error(const DecompositionBank& bank) {
  const auto sum = bank.partition_sum();
  double worst = 0;
  for (std::size_t b = 0; b < sum.size(); ++b)
    if (bank.covers_bin(b)) worst = std::max(worst, std::abs(sum[b] - 1.0));
  return worst;
}

CriterionResult partition_of_unity() {
  const auto g = standard_grid();
  const double uniform = partition_error(build_uniform_bank(g));
  const double dyadic = partition_error(build_dyadic_bank(g));
  double alpha = 0;
  std::string alpha_detail;
  for (const auto& a : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    const AlphaConstants c = a == Rational(3, 4) ? AlphaConstants{1.5, 2.5} : AlphaConstants{};
    const double e = partition_error(build_alpha_bank(g, a, c));
    alpha = std::max(alpha, e);
    alpha_detail += " " + a.to_string() + ":" + fmt(e, 3);
  }
  CriterionResult r;
  r.pass = uniform < 1e-10 && dyadic < 1e-10 && alpha < 1e-8;
  r.detail = "uniform " + fmt(uniform, 3) + ", dyadic " + fmt(dyadic, 3) + ", alpha" + alpha_detail;
  return r;
}

double relative_l2(const GridFunction& a, const GridFunction& b) {
  double num = 0, den = 0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    num += std::norm(a.samples[i] - b.samples[i]);
    den += std::norm(b.samples[i]);
  }
  return std::sqrt(num / den);
}

CriterionResult reconstruction() {
  const auto g = standard_grid();
  NormContext ctx;
  const std::vector<const DecompositionBank*> banks = {&ctx.uniform(g), &ctx.dyadic(g), &ctx.alpha(g, Rational(1, 2))};
  double worst = 0;
  for (const auto& name : generator_names()) {
    const auto f = generate_named(name, g);
    const auto fhat = forward_transform(f);
    for (const auto* bank : banks) {
      GridFunction sum{g, std::vector<Complex>(g.size(), Complex(0, 0))};
      for (std::size_t k = 0; k < bank->size(); ++k) {
        const auto piece = apply_block_spectrum(*bank, k, fhat);
        for (std::size_t i = 0; i < sum.samples.size(); ++i) sum.samples[i] += piece.samples[i];
      }
      worst = std::max(worst, relative_l2(sum, f));
    }
  }
  CriterionResult r;
  r.pass = worst < 1e-8;
  r.detail = std::to_string(generator_names().size()) + " functions x 3 banks, worst relative L2 error " + fmt(worst, 3);
  return r;
}

CriterionResult plancherel() {
  const auto g = standard_grid();
  NormContext ctx;
  const double c = bank_square_floor(ctx.uniform(g));
  const double lo = std::sqrt(c) - 1e-8, hi = 1 + 1e-8;
  double rmin = 1e300, rmax = 0;
  const auto w22 = SpaceSpec::wiener(RI(Rational(1, 2)), RI(Rational(1, 2)));
  for (const auto& name : generator_names()) {
    const auto f = generate_named(name, g);
    const double ratio = space_norm(w22, f, ctx).value / lebesgue_norm(f, RI(Rational(1, 2)));
    rmin = std::min(rmin, ratio);
    rmax = std::max(rmax, ratio);
  }
  const double gauss = lebesgue_norm(gaussian(g), RI(Rational(1, 2)));
  const double gauss_err = std::abs(gauss - std::pow(std::numbers::pi, 0.25));
  CriterionResult r;
  r.pass = rmin >= lo && rmax <= hi && gauss_err < 1e-8;
  r.detail = "ratios in [" + fmt(rmin, 8) + ", " + fmt(rmax, 8) + "], band [" + fmt(lo, 8) + ", " + fmt(hi, 8) +
             "], Gaussian L2 error " + fmt(gauss_err, 3);
  return r;
}

}  // namespace

// Ten functions with spectrum in B(0,1) used to calibrate kCompactSupportBand.
std::vector<GridFunction> compact_support_corpus(const GridSpec& g) {
  std::vector<GridFunction> out;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) out.push_back(random_band_limited(g, 1.0, seed));
  out.push_back(spectral_bump(g, 1.0));
  out.push_back(spectral_bump(g, 0.5, {0.4, 0}));
  out.push_back(spectral_bump(g, 0.5, {-0.45, 0}, {3, 0}));
  out.push_back(spectral_bump(g, 0.25, {0.7, 0}, {-5, 0}));
  out.push_back(spectral_bump(g, 0.75, {0, 0}, {8, 0}));
  return out;
}

namespace {

CriterionResult compact_support() {
  const auto g = standard_grid();
  NormContext ctx;
  const std::vector<std::pair<RI, RI>> pairs = {{RI(Rational(1)), RI(Rational(1))},
                                                {RI(Rational(1, 2)), RI(Rational(2))},
                                                {RI::infinity(), RI(Rational(1, 2))}};
  double worst = 1;
  for (const auto& f : compact_support_corpus(g)) {
    for (const auto& [p, q] : pairs) {
      const double m = space_norm(SpaceSpec::modulation(p, q), f, ctx).value;
      const double w = space_norm(SpaceSpec::wiener(p, q), f, ctx).value;
      const double fl = fourier_lebesgue_norm(f, q);
      for (double ratio : {m / w, m / fl, w / fl}) worst = std::max({worst, ratio, 1 / ratio});
    }
  }
  CriterionResult r;
  r.pass = worst <= kCompactSupportBand;
  r.detail = "10 functions x 3 (p,q), worst pairwise ratio " + fmt(worst, 6) + " vs C = " + fmt(kCompactSupportBand);
  return r;
}

CriterionResult bernstein() {
  GridSpec g;
  g.n = 8192;
  g.period = Rational(64);
  const std::vector<double> radii = {1, 2, 4, 8, 16};
  struct Case {
    RI p, q;
    double tol;
  };
  const std::vector<Case> cases = {{RI(Rational(1)), RI::infinity(), 0.02},
                                   {RI(Rational(1)), RI(Rational(1, 2)), 0.02},
                                   {RI(Rational(2)), RI(Rational(1)), 0.10}};
  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto sweep = bernstein_sweep(g, c.p, c.q, radii);
    const double rel = std::abs(sweep.fitted_exponent - sweep.expected_exponent) / sweep.expected_exponent;
    pass = pass && rel <= c.tol;
    detail += "(" + c.p.to_string() + "," + c.q.to_string() + ") " + fmt(sweep.fitted_exponent, 5) + "/" +
              fmt(sweep.expected_exponent, 5) + "; ";
  }
  const auto young = young_sweep(g, RI(Rational(2)), radii);
  const double rel = std::abs(young.fitted_exponent - young.expected_exponent) / young.expected_exponent;
  pass = pass && rel <= 0.10;
  detail += "young p=1/2 " + fmt(young.fitted_exponent, 5) + "/" + fmt(young.expected_exponent, 5);
  CriterionResult r;
  r.pass = pass;
  r.detail = detail;
  return r;
}

CriterionResult probe_slopes(bool quick) {
  NormContext ctx;
  bool pass = true;
  std::ostringstream detail;

  {  // modulated bump: dst-norm slope -s in log<k>, one nonzero block per member
    GridSpec g;
    g.n = 16384;
    g.period = Rational(64);
    FamilySpec f;
    f.sweep = {1, 2, 4, 8, 16, 32, 64};
    const auto dst = SpaceSpec::parse("W[p=2,q=2,s=-1]");
    const auto report = run_probe(f, SpaceSpec::parse("L[r=2]"), dst, g, Dimension{1}, ctx);
    const double slope = fit_growth(report.parameters, report.dst_norms).slope;
    bool single = true;
    for (std::size_t i = 0; i < f.sweep.size(); ++i)
      single = single && space_norm(dst, generate_member(f, g, i, 0, ctx), ctx).nonzero_blocks == 1;
    pass = pass && std::abs(slope + 1) < 1e-3 && single;
    detail << "bump " << fmt(slope, 7) << (single ? "" : " (multi-block)") << "; ";
  }
  {  // scaled bump: ||eta_lambda||_2 ~ lambda^{-1/2}
    GridSpec g;
    g.n = 32768;
    g.period = Rational(1024);
    FamilySpec f;
    f.kind = FamilyKind::ScaledBump;
    f.sweep = {1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2};
    std::vector<double> norms;
    for (std::size_t i = 0; i < f.sweep.size(); ++i)
      norms.push_back(lebesgue_norm(generate_member(f, g, i, 0, ctx), RI(Rational(1, 2))));
    const double slope = fit_growth(f.sweep, norms).slope;
    pass = pass && std::abs(slope + 0.5) <= 0.02 * 0.5;
    detail << "scaled " << fmt(slope, 5) << "; ";
  }
  {  // Rademacher shells: (E||f||_4^4)^{1/4} ~ (#cells)^{1/2}
    GridSpec g;
    g.n = 8192;
    g.period = Rational(16);
    FamilySpec f;
    f.kind = FamilyKind::RademacherShell;
    f.sweep = {3, 4, 5, 6, 7};
    const int trials = quick ? 16 : 64;
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < f.sweep.size(); ++i) {
      double m4 = 0;
      for (int t = 0; t < trials; ++t) m4 += std::pow(lebesgue_norm(generate_member(f, g, i, t, ctx), RI(Rational(1, 4))), 4);
      xs.push_back(natural_parameter(f, g, i, ctx));
      ys.push_back(std::pow(m4 / trials, 0.25));
    }
    const double slope = fit_growth(xs, ys).slope;
    pass = pass && std::abs(slope - 0.5) <= 0.05;
    detail << "rademacher " << fmt(slope, 5) << " (" << trials << " trials); ";
  }
  for (const auto& a : {Rational(1, 4), Rational(1, 2)}) {
    for (int d : {1, 2}) {
      std::vector<double> xs, ys;
      for (double k : {64, 128, 256, 512, 1024, 2048, 4096}) {
        xs.push_back(std::sqrt(1 + k * k));
        ys.push_back(alpha_block_cell_count(k, a, {}, d));
      }
      const double slope = fit_growth(xs, ys).slope;
      const double expected = d * a.to_double() / (1 - a.to_double());
      pass = pass && std::abs(slope - expected) <= 0.15 * expected;
      detail << "cells a=" << a.to_string() << ",d=" << d << " " << fmt(slope, 5) << "/" << fmt(expected, 5) << "; ";
    }
  }
  for (const auto* q : {"1/2", "1"}) {
    const auto qi = RI::parse(q);
    const int m_max = static_cast<int>(std::floor(std::log2(127.0)));  // K_max of the standard grid
    const double first = approx_identity_functional(1.0, qi, 1);
    double prev = first, last = first;
    bool monotone = true;
    for (int m = 1; m <= m_max; ++m) {
      last = approx_identity_functional(std::ldexp(1.0, -m), qi, 1);
      monotone = monotone && last >= prev;
      prev = last;
    }
    pass = pass && monotone && last >= 2 * first;
    detail << "approx-identity q=" << q << " x" << fmt(last / first, 4) << "; ";
  }
  CriterionResult r;
  r.pass = pass;
  r.detail = detail.str();
  return r;
}

CriterionResult corroboration(bool quick) {
  NormContext ctx;
  int ok = 0, total = 0;
  std::ostringstream detail;
  for (auto inst : designated_probe_instances()) {
    if (quick && inst.family.kind == FamilyKind::RademacherShell) inst.family.trials = 16;
    const auto report = run_probe(inst.family, inst.src, inst.dst, inst.grid, Dimension{inst.grid.d}, ctx);
    const bool status_ok = report.verdict && report.verdict->status == inst.expected;
    const bool good = status_ok && (quick ? report.growth_consistent : report.verdict_corroborated);
    ++total;
    if (good) ++ok;
    detail << inst.name << " " << (inst.expected == Status::Fails ? "growth x" + fmt(report.growth, 4)
                                                                   : "spread " + fmt(report.spread, 3))
           << (good ? "" : " FAIL") << "; ";
  }
  CriterionResult r;
  r.pass = ok == total;
  r.detail = std::to_string(ok) + "/" + std::to_string(total) + " corroborated: " + detail.str();
  return r;
}

CriterionResult region_scans() {
  const Rational step(1, 64);
  bool pass = true;
  std::ostringstream detail;
  for (const auto& [name, which] : {std::pair{"tau1", Indicator::Tau1}, std::pair{"sigma1", Indicator::Sigma1}}) {
    const auto scan = scan_theorem_region(name, ScanParams{}, step);
    const double h = hausdorff_distance(scan_boundary_points(scan), indicator_arrangement(which), 1.0 / 256);
    const bool stable = emit_region_svg(scan) == emit_region_svg(scan_theorem_region(name, ScanParams{}, step));
    pass = pass && h <= step.to_double() + 1e-12 && stable;
    detail << name << " hausdorff " << fmt(h, 5) << (stable ? "" : " (svg unstable)") << "; ";
  }
  ScanParams params;
  const bool stable = emit_region_svg(scan_theorem_region("sobolev-to-wiener", params, step)) ==
                      emit_region_svg(scan_theorem_region("sobolev-to-wiener", params, step));
  pass = pass && stable;
  detail << "theorem svg " << (stable ? "stable" : "unstable");
  CriterionResult r;
  r.pass = pass;
  r.detail = detail.str();
  return r;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = {
      "oracle clause fidelity",     "s-monotonicity",           "duality consistency",
      "specialization consistency", "partition of unity",       "reconstruction",
      "plancherel band",            "compact-support equivalence", "bernstein sweep",
      "probe slopes",               "oracle-probe corroboration", "region scans",
  };
  return names;
}

CriterionResult run_criterion(int id, const SelftestOptions& options) {
  if (id < 1 || id > 12) throw Error(ErrorKind::InvalidArgument, "criteria are numbered 1..12");
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = clause_fidelity(); break;
      case 2: r = monotonicity(options.quick); break;
      case 3: r = duality(options.quick); break;
      case 4: r = specialization(options.quick); break;
      case 5: r = partition_of_unity(); break;
      case 6: r = reconstruction(); break;
      case 7: r = plancherel(); break;
      case 8: r = compact_support(); break;
      case 9: r = bernstein(); break;
      case 10: r = probe_slopes(options.quick); break;
      case 11: r = corroboration(options.quick); break;
      default: r = region_scans(); break;
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
  r.id = id;
  r.name = criterion_names()[static_cast<std::size_t>(id - 1)];
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_selftest(const SelftestOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 12; ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string selftest_to_json(const std::vector<CriterionResult>& results, int indent) {
  nlohmann::json j;
  int passed = 0;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : results) {
    if (r.pass) ++passed;
    list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
  }
  j["criteria"] = std::move(list);
  j["passed"] = passed;
  j["total"] = results.size();
  return j.dump(indent);
}

}  // namespace amalgam
