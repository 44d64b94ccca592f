#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "amalgam/indices.hpp"
#include "amalgam/rational.hpp"

namespace amalgam {

using Complex = std::complex<double>;

/// Periodic sampling grid: spatial domain [0, 2 pi P)^d with N points per
/// axis, frequency lattice (1/P) Z^d restricted to [-N/(2P), N/(2P))^d.
struct GridSpec {
  int d = 1;
  int n = 4096;
  Rational period{16};

  /// Throws InvalidArgument (d not 1 or 2, N not a power of two, P <= 0)
  /// or GridTooSmall (Nyquist frequency below 4).
  void validate() const;

  std::size_t size() const noexcept { return d == 1 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n) * n; }
  double spacing() const;    // h = 2 pi P / N
  double cell_volume() const;  // h^d
  double nyquist() const;    // N / (2P)
  /// Signed lattice index of FFT bin m along one axis.
  int signed_bin(int m) const noexcept { return m < n / 2 ? m : m - n; }
  /// Frequency of bin m along one axis.
  double frequency(int m) const;
  /// Spatial coordinate of sample i along one axis, wrapped to [-pi P, pi P).
  double position(int i) const;

  /// Parses "d=1,N=4096,P=16"; missing keys keep their defaults.
  static GridSpec parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Samples of a function on a GridSpec, row-major (axis 0 slowest).
struct GridFunction {
  GridSpec spec;
  std::vector<Complex> samples;

  GridFunction() = default;
  explicit GridFunction(GridSpec s);
  GridFunction(GridSpec s, std::vector<Complex> values);

  Complex& operator[](std::size_t i) { return samples[i]; }
  const Complex& operator[](std::size_t i) const { return samples[i]; }
};

/// (h^d sum |f|^p)^{1/p}; the maximum modulus for p = inf. Quasi-norm for p < 1.
double lebesgue_norm(const GridFunction& f, const ReciprocalIndex& p);
double lebesgue_norm(const std::vector<double>& magnitudes, double cell_volume, const ReciprocalIndex& p);

/// WGF1 binary format: magic "WGF1", u8 d, u32 N, f64 P, then N^d pairs of
/// f64 (re, im), all little-endian. P is stored as a double and recovered as
/// a rational with denominator at most 2^20.
void write_wgf1(std::ostream& out, const GridFunction& f);
GridFunction read_wgf1(std::istream& in);
void write_wgf1_file(const std::string& path, const GridFunction& f);
GridFunction read_wgf1_file(const std::string& path);

}  // namespace amalgam
