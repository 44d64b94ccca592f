#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "amalgam/error.hpp"
#include "amalgam/generators.hpp"
#include "amalgam/grid.hpp"
#include "amalgam/norms.hpp"
#include "amalgam/oracle.hpp"
#include "amalgam/probes.hpp"
#include "amalgam/regions.hpp"
#include "amalgam/selftest.hpp"
#include "amalgam/serialize.hpp"

namespace amalgam::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(Status status) {
  switch (status) {
    case Status::Holds: return kExitHolds;
    case Status::Fails: return kExitFails;
    default: return kExitUndecided;
  }
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DataFormat: return kExitDataFormat;
    case ErrorKind::CoverageGap:
    case ErrorKind::DegenerateFit: return kExitInternal;
    default: return kExitUsage;
  }
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::map<std::string, std::string> parse_fix(const std::string& text) {
  std::map<std::string, std::string> fix;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("bad --fix item '" + item + "' (want name=value)");
    fix[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
  }
  return fix;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::DataFormat, "cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error(ErrorKind::DataFormat, "failed writing '" + path + "'");
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(v)) throw UsageError("bad sweep value '" + text + "'");
  return v;
}

}  // namespace

std::vector<double> parse_sweep(const std::string& text) {
  const auto t = trim(text);
  std::vector<double> out;
  const auto dots = t.find("..");
  if (dots == std::string::npos) {
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(trim(item)));
    return out;
  }
  const double lo = parse_number(t.substr(0, dots));
  std::string rest = t.substr(dots + 2);
  double factor = 0;
  if (const auto colon = rest.find(':'); colon != std::string::npos) {
    const auto step = rest.substr(colon + 1);
    if (step.size() < 2 || step[0] != 'x') throw UsageError("sweep step must look like ':x2'");
    factor = parse_number(step.substr(1));
    if (factor <= 1 || lo <= 0) throw UsageError("geometric sweep needs factor > 1 and a positive start");
    rest = rest.substr(0, colon);
  }
  const double hi = parse_number(rest);
  if (hi < lo) throw UsageError("sweep end below its start");
  for (double x = lo; x <= hi * (1 + 1e-12); x = factor > 0 ? x * factor : x + 1) {
    out.push_back(x);
    if (out.size() > 100000) throw UsageError("sweep too long");
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp embeddings between Wiener amalgam and classical function spaces"};
  app.name(args.empty() ? "amalgam" : args.front());
  app.require_subcommand(1);

  // oracle
  std::string src, dst, alpha_reading = "as-written";
  int dim = 1;
  auto* oracle = app.add_subcommand("oracle", "Decide src -> dst exactly; prints Verdict JSON");
  oracle->add_option("--src", src, "Source space, e.g. \"M[p=1,q=1,s=0]\"")->required();
  oracle->add_option("--dst", dst, "Target space, e.g. \"W[p=2,q=2]\"")->required();
  oracle->add_option("--d", dim, "Dimension")->check(CLI::PositiveNumber);
  oracle->add_option("--alpha-reading", alpha_reading,
                     "Alpha-modulation -> Wiener threshold for p < q: as-written (tau) or tau1")
      ->check(CLI::IsMember({"as-written", "tau1"}));

  // region
  std::string theorem, fix_text, step_text = "1/32", region_out, region_format;
  int region_d = 1;
  std::string region_reading = "as-written";
  auto* region = app.add_subcommand("region", "Scan a verdict region over (1/p, 1/q) in [0,2]^2");
  region->add_option("--theorem", theorem, "Theorem id, or tau1 / sigma1")->required();
  region->add_option("--fix", fix_text, "Fixed indices, e.g. r=p,s=0");
  region->add_option("--step", step_text, "Lattice step: 1/16, 1/32 or 1/64");
  region->add_option("--d", region_d, "Dimension")->check(CLI::PositiveNumber);
  region->add_option("--alpha-reading", region_reading, "as-written or tau1")
      ->check(CLI::IsMember({"as-written", "tau1"}));
  region->add_option("--out", region_out, "Output path (.svg or .csv); stdout when absent");
  region->add_option("--format", region_format, "svg or csv; inferred from --out")
      ->check(CLI::IsMember({"svg", "csv"}));

  // norm
  std::string space_text, in_path, gen_name, grid_text;
  std::uint64_t norm_seed = 7;
  auto* norm = app.add_subcommand("norm", "Compute a space norm on a WGF1 file or a built-in generator");
  norm->add_option("--space", space_text, "Space, e.g. \"W[p=2,q=2,s=0]\"")->required();
  auto* in_opt = norm->add_option("--in", in_path, "WGF1 input file");
  auto* gen_opt = norm->add_option("--gen", gen_name, "Built-in generator");
  in_opt->excludes(gen_opt);
  gen_opt->excludes(in_opt);
  auto* grid_opt = norm->add_option("--grid", grid_text, "Grid for --gen, e.g. d=1,N=4096,P=16");
  grid_opt->excludes(in_opt);
  norm->add_option("--seed", norm_seed, "Seed for random generators");

  // probe
  std::string family_name, probe_src, probe_dst, sweep_text, probe_grid, probe_format = "json", probe_out;
  std::string designated, probe_alpha;
  FamilySpec fam;
  auto* probe = app.add_subcommand("probe", "Run an extremal family through src and dst norms");
  auto* des_opt = probe->add_option("--designated", designated, "Run a named designated instance");
  auto* fam_opt = probe->add_option("--family", family_name, "Family kind, e.g. modulated-bump");
  probe->add_option("--src", probe_src, "Source space");
  probe->add_option("--dst", probe_dst, "Target space");
  probe->add_option("--sweep", sweep_text, "Sweep: 1,2,4  2..8  1..64:x2");
  probe->add_option("--trials", fam.trials, "Rademacher trials")->check(CLI::PositiveNumber);
  probe->add_option("--seed", fam.seed, "Seed");
  probe->add_option("--theta", fam.theta, "Coefficient decay exponent");
  probe->add_option("--spacing", fam.spacing, "Translate spacing (0 = automatic)");
  probe->add_option("--j-start", fam.j_start, "First shell")->check(CLI::NonNegativeNumber);
  probe->add_flag("--alpha-shells", fam.alpha_shells, "Rademacher signs over alpha blocks");
  probe->add_option("--alpha", probe_alpha, "Alpha for alpha families, e.g. 1/2");
  probe->add_option("--grid", probe_grid, "Grid, e.g. d=1,N=16384,P=64");
  probe->add_option("--format", probe_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  probe->add_option("--out", probe_out, "Output path; stdout when absent");
  des_opt->excludes(fam_opt);
  fam_opt->excludes(des_opt);

  // selftest
  bool quick = false;
  std::vector<int> only;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite; prints a JSON summary");
  selftest->add_flag("--quick", quick, "Coarser grids and fewer trials");
  selftest->add_option("--only", only, "Criterion ids to run")->check(CLI::Range(1, 12))->delimiter(',');

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (oracle->parsed()) {
      EmbeddingQuery q{SpaceSpec::parse(src), SpaceSpec::parse(dst), Dimension(dim), {}};
      q.options.alpha_reading = parse_alpha_reading(alpha_reading);
      const Verdict v = decide(q);
      out << verdict_to_json(VerdictRecord{v, q}) << '\n';
      return exit_code(v.status);
    }

    if (region->parsed()) {
      ScanParams params;
      params.fix = parse_fix(fix_text);
      params.d = Dimension(region_d);
      params.options.alpha_reading = parse_alpha_reading(region_reading);
      const auto scan = scan_theorem_region(theorem, params, Rational::parse(step_text));
      std::string format = region_format;
      if (format.empty()) format = ends_with(region_out, ".csv") ? "csv" : "svg";
      write_text(region_out, format == "csv" ? emit_region_csv(scan) : emit_region_svg(scan), out);
      return 0;
    }

    if (norm->parsed()) {
      if (in_path.empty() && gen_name.empty()) throw UsageError("norm needs --in or --gen");
      const SpaceSpec space = SpaceSpec::parse(space_text);
      GridFunction f;
      if (!in_path.empty()) {
        f = read_wgf1_file(in_path);
      } else {
        const GridSpec grid = grid_text.empty() ? GridSpec{} : GridSpec::parse(grid_text);
        grid.validate();
        f = generate_named(gen_name, grid, norm_seed);
      }
      out << norm_to_json(space_norm(space, f), space, f.spec) << '\n';
      return 0;
    }

    if (probe->parsed()) {
      SpaceSpec s, t;
      GridSpec grid;
      if (!designated.empty()) {
        const ProbeInstance* found = nullptr;
        for (const auto& inst : designated_probe_instances())
          if (inst.name == designated) found = &inst;
        if (!found) throw UsageError("unknown designated instance '" + designated + "'");
        const auto trials = fam.trials;
        const auto seed = fam.seed;
        fam = found->family;
        if (probe->count("--trials")) fam.trials = trials;
        if (probe->count("--seed")) fam.seed = seed;
        s = found->src;
        t = found->dst;
        grid = found->grid;
      } else {
        if (family_name.empty() || probe_src.empty() || probe_dst.empty() || sweep_text.empty())
          throw UsageError("probe needs --family, --src, --dst and --sweep (or --designated)");
        const auto kind = parse_family_kind(family_name);
        if (!kind) throw UsageError("unknown family '" + family_name + "'");
        fam.kind = *kind;
        fam.sweep = parse_sweep(sweep_text);
        if (!probe_alpha.empty()) fam.alpha = Rational::parse(probe_alpha);
        s = SpaceSpec::parse(probe_src);
        t = SpaceSpec::parse(probe_dst);
        if (!probe_grid.empty()) grid = GridSpec::parse(probe_grid);
      }
      grid.validate();
      const auto report = run_probe(fam, s, t, grid, Dimension(grid.d));
      write_text(probe_out, probe_format == "csv" ? probe_csv(report) : probe_to_json(report) + "\n", out);
      return 0;
    }

    if (selftest->parsed()) {
      SelftestOptions opts;
      opts.quick = quick;
      std::vector<CriterionResult> results;
      if (only.empty()) {
        results = run_selftest(opts);
      } else {
        for (int id : only) results.push_back(run_criterion(id, opts));
      }
      out << selftest_to_json(results) << '\n';
      for (const auto& r : results)
        if (!r.pass) return kExitFails;
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace amalgam::cli
