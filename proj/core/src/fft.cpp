#include "amalgam/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "amalgam/error.hpp"

namespace amalgam {

namespace {

// FFTW plans are created once per (d, N, sign) and reused through the
// new-array interface. Planning is not thread-safe, executing is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int d, int n, int sign) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_tuple(d, n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    const std::size_t size = d == 1 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n) * n;
    auto* buffer = fftw_alloc_complex(size);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = d == 1 ? fftw_plan_dft_1d(n, buffer, buffer, sign, flags)
                            : fftw_plan_dft_2d(n, n, buffer, buffer, sign, flags);
    fftw_free(buffer);
    if (!plan) throw Error(ErrorKind::InvalidArgument, "FFTW could not plan this transform");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void dft_in_place(const GridSpec& spec, std::vector<Complex>& data, int sign) {
  if (data.size() != spec.size()) throw Error(ErrorKind::InvalidArgument, "transform size does not match grid");
  fftw_plan plan = cache().get(spec.d, spec.n, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
}

std::vector<Complex> forward_transform(const GridFunction& f) {
  std::vector<Complex> out = f.samples;
  dft_in_place(f.spec, out, -1);
  const double scale = f.spec.cell_volume();
  for (auto& z : out) z *= scale;
  return out;
}

GridFunction inverse_transform(const GridSpec& spec, std::vector<Complex> spectrum) {
  dft_in_place(spec, spectrum, +1);
  const double scale = 1.0 / (spec.cell_volume() * static_cast<double>(spec.size()));
  for (auto& z : spectrum) z *= scale;
  return GridFunction(spec, std::move(spectrum));
}

}  // namespace amalgam
