#include "amalgam/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "amalgam/error.hpp"

namespace amalgam {

void GridSpec::validate() const {
  if (d != 1 && d != 2) throw Error(ErrorKind::InvalidArgument, "grid dimension must be 1 or 2");
  if (n < 8 || !std::has_single_bit(static_cast<unsigned>(n))) {
    throw Error(ErrorKind::InvalidArgument, "N must be a power of two >= 8");
  }
  if (period <= Rational(0)) throw Error(ErrorKind::InvalidArgument, "period P must be positive");
  if (Rational(n) / (Rational(2) * period) < Rational(4)) {
    throw Error(ErrorKind::GridTooSmall, "Nyquist frequency N/(2P) must be at least 4");
  }
}

double GridSpec::spacing() const { return 2.0 * std::numbers::pi * period.to_double() / n; }

double GridSpec::cell_volume() const { return std::pow(spacing(), d); }

double GridSpec::nyquist() const { return n / (2.0 * period.to_double()); }

double GridSpec::frequency(int m) const { return signed_bin(m) / period.to_double(); }

double GridSpec::position(int i) const { return signed_bin(i) * spacing(); }

GridSpec GridSpec::parse(const std::string& text) {
  GridSpec g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "bad grid item '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "d") {
        g.d = std::stoi(value);
      } else if (key == "N") {
        g.n = std::stoi(value);
      } else if (key == "P") {
        g.period = Rational::parse(value);
      } else {
        throw Error(ErrorKind::InvalidArgument, "unknown grid key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidArgument, "bad grid value '" + item + "'");
    }
  }
  g.validate();
  return g;
}

std::string GridSpec::to_string() const {
  return "d=" + std::to_string(d) + ",N=" + std::to_string(n) + ",P=" + period.to_string();
}

GridFunction::GridFunction(GridSpec s) : spec(s), samples(s.size()) {}

GridFunction::GridFunction(GridSpec s, std::vector<Complex> values) : spec(s), samples(std::move(values)) {
  if (samples.size() != spec.size()) throw Error(ErrorKind::InvalidArgument, "sample count does not match grid");
}

double lebesgue_norm(const std::vector<double>& magnitudes, double cell_volume, const ReciprocalIndex& p) {
  if (p.is_infinite()) {
    double m = 0.0;
    for (double x : magnitudes) m = std::max(m, x);
    return m;
  }
  const double u = p.u().to_double();
  const double exponent = 1.0 / u;
  double sum = 0.0;
  for (double x : magnitudes) sum += std::pow(x, exponent);
  return std::pow(cell_volume * sum, u);
}

double lebesgue_norm(const GridFunction& f, const ReciprocalIndex& p) {
  std::vector<double> mags(f.samples.size());
  for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(f.samples[i]);
  return lebesgue_norm(mags, f.spec.cell_volume(), p);
}

namespace {

constexpr unsigned char kMagic[4] = {0x57, 0x47, 0x46, 0x31};

static_assert(std::endian::native == std::endian::little, "WGF1 I/O assumes a little-endian host");

template <typename T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw Error(ErrorKind::DataFormat, "WGF1 stream truncated");
  return value;
}

// Best rational approximation with bounded denominator (continued fractions).
Rational recover_rational(double x) {
  constexpr std::int64_t kMaxDen = 1 << 20;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(r);
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = ai * p1 + p0;
    const std::int64_t q2 = ai * q1 + q0;
    if (q2 > kMaxDen) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = r - a;
    if (frac < 1e-12) break;
    r = 1.0 / frac;
  }
  return Rational(p1, q1);
}

}  // namespace

void write_wgf1(std::ostream& out, const GridFunction& f) {
  out.write(reinterpret_cast<const char*>(kMagic), 4);
  put<std::uint8_t>(out, static_cast<std::uint8_t>(f.spec.d));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(f.spec.n));
  put<double>(out, f.spec.period.to_double());
  for (const auto& z : f.samples) {
    put<double>(out, z.real());
    put<double>(out, z.imag());
  }
  if (!out) throw Error(ErrorKind::DataFormat, "failed to write WGF1 stream");
}

GridFunction read_wgf1(std::istream& in) {
  unsigned char magic[4] = {};
  in.read(reinterpret_cast<char*>(magic), 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) throw Error(ErrorKind::DataFormat, "not a WGF1 stream");
  GridSpec spec;
  spec.d = get<std::uint8_t>(in);
  const auto n = get<std::uint32_t>(in);
  if (n > (1u << 24)) throw Error(ErrorKind::DataFormat, "WGF1 sample count out of range");
  spec.n = static_cast<int>(n);
  const double period = get<double>(in);
  if (!std::isfinite(period) || period <= 0) throw Error(ErrorKind::DataFormat, "WGF1 period is not positive");
  spec.period = recover_rational(period);
  try {
    spec.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::DataFormat, std::string("WGF1 header: ") + e.what());
  }
  GridFunction f(spec);
  for (auto& z : f.samples) {
    const double re = get<double>(in);
    const double im = get<double>(in);
    if (!std::isfinite(re) || !std::isfinite(im)) throw Error(ErrorKind::DataFormat, "WGF1 sample is not finite");
    z = Complex(re, im);
  }
  if (in.peek() != std::char_traits<char>::eof()) throw Error(ErrorKind::DataFormat, "WGF1 stream has trailing bytes");
  return f;
}

void write_wgf1_file(const std::string& path, const GridFunction& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::DataFormat, "cannot open '" + path + "' for writing");
  write_wgf1(out, f);
}

GridFunction read_wgf1_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::DataFormat, "cannot open '" + path + "'");
  return read_wgf1(in);
}

}  // namespace amalgam
