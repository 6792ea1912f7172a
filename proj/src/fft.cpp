#include "hardy/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace hardy::fft {
namespace {

struct Buffer {
  explicit Buffer(std::size_t n)
      : data(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {}
  ~Buffer() { fftw_free(data); }
  Buffer(const Buffer&) = delete;
  Buffer& operator=(const Buffer&) = delete;
  fftw_complex* data;
};

// Plans are created once per (size, direction) and executed through the
// new-array interface, which is thread safe.
fftw_plan plan_for(std::size_t n, int sign) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, int>, fftw_plan> plans;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, sign);
  if (auto it = plans.find(key); it != plans.end()) return it->second;
  Buffer in(n);
  Buffer out(n);
  fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), in.data, out.data, sign,
                                 FFTW_ESTIMATE);
  plans.emplace(key, p);
  return p;
}

std::vector<std::complex<double>> transform(std::span<const std::complex<double>> in,
                                            int sign) {
  const std::size_t n = in.size();
  if (n == 0) return {};
  Buffer a(n);
  Buffer b(n);
  std::memcpy(a.data, in.data(), sizeof(fftw_complex) * n);
  fftw_execute_dft(plan_for(n, sign), a.data, b.data);
  const auto* result = reinterpret_cast<const std::complex<double>*>(b.data);
  return {result, result + n};
}

}  // namespace

std::vector<std::complex<double>> forward(std::span<const std::complex<double>> in) {
  return transform(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> inverse(std::span<const std::complex<double>> in) {
  return transform(in, FFTW_BACKWARD);
}

}  // namespace hardy::fft
