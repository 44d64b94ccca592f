#include "amalgam/regions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "amalgam/error.hpp"
#include "amalgam/space.hpp"

namespace amalgam {

std::string region_flags_to_string(unsigned flags) {
  static const std::pair<unsigned, const char*> kNames[] = {
      {kTiePiece1, "tie1"}, {kTiePiece2, "tie2"},          {kTiePiece3, "tie3"},
      {kEdge, "edge"},      {kNonStrictEdge, "nonstrict"}, {kStrictExcluded, "strict"},
  };
  std::string out;
  for (const auto& [bit, name] : kNames) {
    if (flags & bit) {
      if (!out.empty()) out += ';';
      out += name;
    }
  }
  return out;
}

PieceClassification classify_indicator_region(Indicator which, const Rational& u, const Rational& v) {
  const ReciprocalIndex p(u);
  const ReciprocalIndex q(v);
  return which == Indicator::Tau1 ? tau1_piece(p, q) : sigma1_piece(p, q);
}

namespace {

using Builder = std::function<EmbeddingQuery(const Rational&, const Rational&)>;

struct TheoremShape {
  const char* id;
  std::vector<std::string> keys;
};

const std::vector<TheoremShape>& shapes() {
  static const std::vector<TheoremShape> kShapes = {
      {"sobolev-to-wiener", {"r", "s"}},
      {"wiener-to-sobolev", {"r", "s"}},
      {"hardy-to-wiener", {"r", "s"}},
      {"wiener-to-hardy", {"r", "s"}},
      {"besov-p0-to-wiener", {"p0", "s"}},
      {"wiener-to-besov-p0", {"p0", "s"}},
      {"besov-q0-to-wiener", {"q0", "s"}},
      {"wiener-to-besov-q0", {"q0", "s"}},
      {"modulation-to-wiener", {"p1", "q1", "s"}},
      {"wiener-to-modulation", {"p1", "q1", "s"}},
      {"alpha-modulation-to-wiener", {"alpha", "s"}},
      {"wiener-to-alpha-modulation", {"alpha", "s"}},
      {"triebel-to-wiener", {"r", "s"}},
      {"wiener-to-triebel", {"r", "s"}},
      {"tau1", {}},
      {"sigma1", {}},
  };
  return kShapes;
}

class Params {
 public:
  Params(const std::string& theorem, const ScanParams& params) : fix_(params.fix) {
    const TheoremShape* shape = nullptr;
    for (const auto& s : shapes()) {
      if (theorem == s.id) shape = &s;
    }
    if (!shape) throw Error(ErrorKind::InvalidArgument, "unknown theorem id '" + theorem + "'");
    for (const auto& [key, value] : fix_) {
      if (std::find(shape->keys.begin(), shape->keys.end(), key) == shape->keys.end()) {
        throw Error(ErrorKind::InvalidArgument, "parameter '" + key + "' does not apply to " + theorem);
      }
    }
  }

  // Exponent parameter: "p"/"q" ties it to an axis, otherwise a fixed exponent.
  ReciprocalIndex index(const std::string& key, const std::string& fallback, const Rational& u,
                        const Rational& v) const {
    const std::string text = value(key, fallback);
    if (text == "p") return ReciprocalIndex(u);
    if (text == "q") return ReciprocalIndex(v);
    return ReciprocalIndex::parse(text);
  }

  Rational number(const std::string& key, const std::string& fallback) const {
    return Rational::parse(value(key, fallback));
  }

 private:
  std::string value(const std::string& key, const std::string& fallback) const {
    auto it = fix_.find(key);
    return it == fix_.end() ? fallback : it->second;
  }

  std::map<std::string, std::string> fix_;
};

Builder make_builder(const std::string& id, const ScanParams& sp) {
  const Params params(id, sp);
  const Dimension d = sp.d;
  const OracleOptions opts = sp.options;
  const Rational s = id == "tau1" || id == "sigma1" ? Rational(0) : params.number("s", "0");
  auto query = [d, opts](SpaceSpec a, SpaceSpec b) { return EmbeddingQuery{std::move(a), std::move(b), d, opts}; };
  using S = SpaceSpec;
  using RI = ReciprocalIndex;

  if (id == "sobolev-to-wiener") {
    return [=](const Rational& u, const Rational& v) {
      return query(S::sobolev(params.index("r", "p", u, v), s), S::wiener(RI(u), RI(v)));
    };
  }
  if (id == "wiener-to-sobolev") {
    return [=](const Rational& u, const Rational& v) {
      return query(S::wiener(RI(u), RI(v)), S::sobolev(params.index("r", "p", u, v), s));
    };
  }
  if (id == "hardy-to-wiener") {
    return [=](const Rational& u, const Rational& v) {
      return query(S::local_hardy(params.index("r", "p", u, v)), S::wiener(RI(u), RI(v), -s));
    };
  }
  if (id == "wiener-to-hardy") {
    return [=](const Rational& u, const Rational& v) {
      return query(S::wiener(RI(u), RI(v), -s), S::local_hardy(params.index("r", "p", u, v)));
    };
  }
  if (id == "besov-p0-to-wiener") {
    return [=](const Rational& u, const Rational& v) {
      return query(S::besov(params.index("p0", "p", u, v), RI(v), s), S::wiener(RI(u), RI(v)));
    };
  }
  if (id == "wiener-to-besov-p0") {
    return [=](const Rational& u, const Rational& v) {
      return query(S::wiener(RI(u), RI(v)), S::besov(params.index("p0", "p", u, v), RI(v), s));
    };
  }
  if (id == "besov-q0-to-wiener") {
    return [=](const Rational& u, const Rational& v) {
      return query(S::besov(RI(u), params.index("q0", "q", u, v), s), S::wiener(RI(u), RI(v)));
    };
  }
  if (id == "wiener-to-besov-q0") {
    return [=](const Rational& u, const Rational& v) {
      return query(S::wiener(RI(u), RI(v)), S::besov(RI(u), params.index("q0", "q", u, v), s));
    };
  }
  if (id == "modulation-to-wiener") {
    return [=](const Rational& u, const Rational& v) {
      return query(S::modulation(params.index("p1", "p", u, v), params.index("q1", "q", u, v), s),
                   S::wiener(RI(u), RI(v)));
    };
  }
  if (id == "wiener-to-modulation") {
    return [=](const Rational& u, const Rational& v) {
      return query(S::wiener(RI(u), RI(v)),
                   S::modulation(params.index("p1", "p", u, v), params.index("q1", "q", u, v), s));
    };
  }
  if (id == "alpha-modulation-to-wiener" || id == "wiener-to-alpha-modulation") {
    const Rational alpha = params.number("alpha", "1/2");
    AlphaParam{alpha};  // validates the range once, before the scan
    const bool forward = id == "alpha-modulation-to-wiener";
    return [=](const Rational& u, const Rational& v) {
      S ma = S::alpha_modulation(RI(u), RI(v), s, alpha);
      S w = S::wiener(RI(u), RI(v));
      return forward ? query(ma, w) : query(w, ma);
    };
  }
  if (id == "triebel-to-wiener") {
    return [=](const Rational& u, const Rational& v) {
      return query(S::triebel(RI(u), params.index("r", "2", u, v), s), S::wiener(RI(u), RI(v)));
    };
  }
  if (id == "wiener-to-triebel") {
    return [=](const Rational& u, const Rational& v) {
      return query(S::wiener(RI(u), RI(v)), S::triebel(RI(u), params.index("r", "2", u, v), s));
    };
  }
  return {};
}

void mark_edges(RegionScan& scan) {
  const int n = scan.side;
  for (int iv = 0; iv < n; ++iv) {
    for (int iu = 0; iu < n; ++iu) {
      auto& cell = scan.cells[static_cast<std::size_t>(iv) * n + iu];
      const int du[4] = {1, -1, 0, 0};
      const int dv[4] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        const int ju = iu + du[k];
        const int jv = iv + dv[k];
        if (ju < 0 || jv < 0 || ju >= n || jv >= n) continue;
        if (scan.at(ju, jv).label != cell.label) cell.flags |= kEdge;
      }
    }
  }
}

}  // namespace

const std::vector<std::string>& scannable_theorems() {
  static const std::vector<std::string> kIds = [] {
    std::vector<std::string> ids;
    for (const auto& s : shapes()) ids.emplace_back(s.id);
    return ids;
  }();
  return kIds;
}

RegionScan scan_theorem_region(const std::string& theorem_id, const ScanParams& params, const Rational& step) {
  if (step != Rational(1, 16) && step != Rational(1, 32) && step != Rational(1, 64)) {
    throw Error(ErrorKind::InvalidArgument, "step must be 1/16, 1/32 or 1/64");
  }
  RegionScan scan;
  scan.theorem_id = theorem_id;
  scan.params = params;
  scan.step = step;
  scan.side = static_cast<int>(2 * step.den()) + 1;
  scan.cells.reserve(static_cast<std::size_t>(scan.side) * scan.side);

  const bool indicator = theorem_id == "tau1" || theorem_id == "sigma1";
  const Builder build = make_builder(theorem_id, params);
  for (int iv = 0; iv < scan.side; ++iv) {
    for (int iu = 0; iu < scan.side; ++iu) {
      RegionCell cell;
      cell.u = step * Rational(iu);
      cell.v = step * Rational(iv);
      if (indicator) {
        const auto piece = classify_indicator_region(theorem_id == "tau1" ? Indicator::Tau1 : Indicator::Sigma1,
                                                     cell.u, cell.v);
        cell.label = "(" + std::to_string(piece.piece) + ")";
        if (piece.ties & (piece.ties - 1)) cell.flags |= piece.ties;
      } else {
        try {
          const Verdict verdict = decide(build(cell.u, cell.v));
          cell.label = to_string(verdict.status);
          cell.strict = verdict.strict;
          if (verdict.boundary == BoundaryKind::NonStrictBoundary) cell.flags |= kNonStrictEdge;
          if (verdict.boundary == BoundaryKind::StrictBoundaryExcluded) cell.flags |= kStrictExcluded;
        } catch (const Error&) {
          cell.label = to_string(Status::OutsideHypothesis);
        }
      }
      scan.cells.push_back(std::move(cell));
    }
  }
  mark_edges(scan);
  return scan;
}

namespace {

const char* fill_for(const std::string& label) {
  if (label == "Holds") return "#9ecae1";
  if (label == "Fails") return "#fcbba1";
  if (label == "OutsideHypothesis") return "#d9d9d9";
  if (label == "OpenInPaper") return "#fdd0a2";
  if (label == "(1)") return "#c7e9c0";
  if (label == "(2)") return "#dadaeb";
  if (label == "(3)") return "#fdae6b";
  return "#ffffff";
}

std::string css_id(const std::string& label) {
  std::string out = "label-";
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

}  // namespace

std::string emit_region_svg(const RegionScan& scan, const SvgStyle& style) {
  const int n = scan.side;
  const int unit = style.pixels_per_unit;
  const int m = style.margin;
  const int extent = 2 * unit;
  const int width = extent + 2 * m;
  // Cell (iu, iv) covers [iu - 1/2, iu + 1/2] steps, clipped to the window.
  // Lattice coordinates are doubled so every edge lands on an integer.
  const double px_per_half = static_cast<double>(unit) / (2.0 * static_cast<double>(scan.step.den()));
  auto px_u = [&](int half) { return m + static_cast<int>(std::lround(std::clamp(half, 0, 2 * (n - 1)) * px_per_half)); };
  auto px_v = [&](int half) {
    return m + extent - static_cast<int>(std::lround(std::clamp(half, 0, 2 * (n - 1)) * px_per_half));
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << width
      << "\" viewBox=\"0 0 " << width << ' ' << width << "\">\n";
  out << "<title>" << scan.theorem_id << "</title>\n";

  std::vector<std::string> labels;
  for (const auto& c : scan.cells) {
    if (std::find(labels.begin(), labels.end(), c.label) == labels.end()) labels.push_back(c.label);
  }
  std::sort(labels.begin(), labels.end());

  for (const auto& label : labels) {
    out << "<g id=\"" << css_id(label) << "\" fill=\"" << fill_for(label) << "\" stroke=\"none\">\n";
    for (int iv = 0; iv < n; ++iv) {
      int iu = 0;
      while (iu < n) {
        if (scan.at(iu, iv).label != label) {
          ++iu;
          continue;
        }
        int end = iu;
        while (end + 1 < n && scan.at(end + 1, iv).label == label) ++end;
        const int x0 = px_u(2 * iu - 1);
        const int x1 = px_u(2 * end + 1);
        const int y0 = px_v(2 * iv + 1);
        const int y1 = px_v(2 * iv - 1);
        out << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << x1 - x0 << "\" height=\"" << y1 - y0
            << "\"/>\n";
        iu = end + 1;
      }
    }
    out << "</g>\n";
  }

  // Edges between differently labelled neighbours. An edge is dashed when the
  // side on which the embedding holds does so through a strict inequality.
  auto dashed = [&](const RegionCell& a, const RegionCell& b) {
    const RegionCell* holds = a.label == "Holds" ? &a : (b.label == "Holds" ? &b : nullptr);
    return holds != nullptr && holds->strict;
  };
  std::ostringstream solid_edges;
  std::ostringstream dashed_edges;
  for (int iv = 0; iv < n; ++iv) {
    for (int iu = 0; iu < n; ++iu) {
      const auto& c = scan.at(iu, iv);
      if (iu + 1 < n && scan.at(iu + 1, iv).label != c.label) {
        auto& sink = dashed(c, scan.at(iu + 1, iv)) ? dashed_edges : solid_edges;
        const int x = px_u(2 * iu + 1);
        sink << "M" << x << ' ' << px_v(2 * iv - 1) << "V" << px_v(2 * iv + 1);
      }
      if (iv + 1 < n && scan.at(iu, iv + 1).label != c.label) {
        auto& sink = dashed(c, scan.at(iu, iv + 1)) ? dashed_edges : solid_edges;
        const int y = px_v(2 * iv + 1);
        sink << "M" << px_u(2 * iu - 1) << ' ' << y << "H" << px_u(2 * iu + 1);
      }
    }
  }
  out << "<path id=\"edges-solid\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\" d=\"" << solid_edges.str()
      << "\"/>\n";
  out << "<path id=\"edges-dashed\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\" stroke-dasharray=\"3,2\" d=\""
      << dashed_edges.str() << "\"/>\n";

  // Axes with ticks at multiples of 1/2.
  out << "<g id=\"axes\" stroke=\"#000000\" fill=\"#000000\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<line x1=\"" << m << "\" y1=\"" << m + extent << "\" x2=\"" << m + extent << "\" y2=\"" << m + extent
      << "\"/>\n";
  out << "<line x1=\"" << m << "\" y1=\"" << m + extent << "\" x2=\"" << m << "\" y2=\"" << m << "\"/>\n";
  static const char* kTicks[] = {"0", "1/2", "1", "3/2", "2"};
  for (int k = 0; k <= 4; ++k) {
    const int off = k * unit / 2;
    out << "<text x=\"" << m + off - 6 << "\" y=\"" << m + extent + 16 << "\" stroke=\"none\">" << kTicks[k]
        << "</text>\n";
    out << "<text x=\"" << m - 30 << "\" y=\"" << m + extent - off + 4 << "\" stroke=\"none\">" << kTicks[k]
        << "</text>\n";
  }
  out << "<text x=\"" << m + extent / 2 << "\" y=\"" << m + extent + 34 << "\" stroke=\"none\">1/p</text>\n";
  out << "<text x=\"" << 6 << "\" y=\"" << m + extent / 2 << "\" stroke=\"none\">1/q</text>\n";
  out << "</g>\n";

  // Legend.
  out << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
  int x = m;
  for (const auto& label : labels) {
    out << "<rect x=\"" << x << "\" y=\"8\" width=\"10\" height=\"10\" stroke=\"#000000\" fill=\"" << fill_for(label)
        << "\"/><text x=\"" << x + 14 << "\" y=\"17\">" << label << "</text>\n";
    x += 20 + 7 * static_cast<int>(label.size());
  }
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

std::string emit_region_csv(const RegionScan& scan) {
  std::ostringstream out;
  out << "u,v,label,boundary_flags\n";
  for (const auto& c : scan.cells) {
    out << c.u.to_string() << ',' << c.v.to_string() << ',' << c.label << ',' << region_flags_to_string(c.flags)
        << '\n';
  }
  return out.str();
}

std::vector<Point2> scan_boundary_points(const RegionScan& scan) {
  std::vector<Point2> points;
  const int n = scan.side;
  for (int iv = 0; iv < n; ++iv) {
    for (int iu = 0; iu < n; ++iu) {
      const auto& c = scan.at(iu, iv);
      const double u = c.u.to_double();
      const double v = c.v.to_double();
      const double h = scan.step.to_double();
      if (iu + 1 < n && scan.at(iu + 1, iv).label != c.label) points.push_back({u + h / 2, v});
      if (iv + 1 < n && scan.at(iu, iv + 1).label != c.label) points.push_back({u, v + h / 2});
    }
  }
  return points;
}

std::vector<Segment2> indicator_arrangement(Indicator which) {
  const Point2 triple{0.5, 0.5};
  if (which == Indicator::Tau1) {
    return {{{0.0, 0.5}, triple}, {triple, {1.0, 0.0}}, {triple, {0.5, 2.0}}};
  }
  return {{triple, {2.0, 0.5}}, {{0.0, 1.0}, triple}, {{0.5, 0.0}, triple}};
}

namespace {

double point_segment_distance(const Point2& p, const Segment2& s) {
  const double dx = s.b.u - s.a.u;
  const double dy = s.b.v - s.a.v;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.u - s.a.u) * dx + (p.v - s.a.v) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double cu = s.a.u + t * dx - p.u;
  const double cv = s.a.v + t * dy - p.v;
  return std::sqrt(cu * cu + cv * cv);
}

}  // namespace

double hausdorff_distance(const std::vector<Point2>& points, const std::vector<Segment2>& segments, double sample) {
  if (points.empty() || segments.empty()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& p : points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : segments) best = std::min(best, point_segment_distance(p, s));
    worst = std::max(worst, best);
  }
  for (const auto& s : segments) {
    const double len = std::hypot(s.b.u - s.a.u, s.b.v - s.a.v);
    const int count = std::max(1, static_cast<int>(std::ceil(len / sample)));
    for (int k = 0; k <= count; ++k) {
      const double t = static_cast<double>(k) / count;
      const Point2 q{s.a.u + t * (s.b.u - s.a.u), s.a.v + t * (s.b.v - s.a.v)};
      double best = std::numeric_limits<double>::infinity();
      for (const auto& p : points) best = std::min(best, std::hypot(p.u - q.u, p.v - q.v));
      worst = std::max(worst, best);
    }
  }
  return worst;
}

}  // namespace amalgam
