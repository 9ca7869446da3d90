#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace hankelscope::detail {

namespace {

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, FftDirection dir) {
    const Key key{n, dir == FftDirection::kForward ? FFTW_FORWARD : FFTW_BACKWARD};
    {
      std::shared_lock lock(mutex_);
      if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    // The planner may scribble on the buffers, so plan on scratch storage.
    auto* in = fftw_alloc_complex(static_cast<size_t>(n));
    auto* out = fftw_alloc_complex(static_cast<size_t>(n));
    fftw_plan plan = fftw_plan_dft_1d(n, in, out, key.second, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  using Key = std::pair<int, int>;
  std::shared_mutex mutex_;
  std::map<Key, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> in, FftDirection dir) {
  const int n = static_cast<int>(in.size());
  std::vector<std::complex<double>> src(in.begin(), in.end());
  std::vector<std::complex<double>> out(in.size());
  if (n == 0) return out;
  fftw_plan plan = cache().get(n, dir);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(src.data()), reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace hankelscope::detail
