#include "hg/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace hg::fft {
namespace {

std::mutex plan_mutex;

fftw_plan cached_plan(int n, int sign) {
  static std::map<std::pair<int, int>, fftw_plan> plans;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto key = std::make_pair(n, sign);
  if (auto it = plans.find(key); it != plans.end()) return it->second;
  // Planning needs scratch arrays; FFTW_ESTIMATE leaves them untouched.
  fftw_complex* in = fftw_alloc_complex(static_cast<size_t>(n));
  fftw_complex* out = fftw_alloc_complex(static_cast<size_t>(n));
  fftw_plan plan = fftw_plan_dft_1d(n, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(in);
  fftw_free(out);
  plans.emplace(key, plan);
  return plan;
}

std::vector<std::complex<double>> run(std::span<const std::complex<double>> x, int sign) {
  std::vector<std::complex<double>> in(x.begin(), x.end());
  std::vector<std::complex<double>> out(x.size());
  if (x.empty()) return out;
  fftw_plan plan = cached_plan(static_cast<int>(x.size()), sign);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

std::vector<std::complex<double>> forward(std::span<const std::complex<double>> x) {
  return run(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> backward(std::span<const std::complex<double>> X) {
  return run(X, FFTW_BACKWARD);
}

}  // namespace hg::fft
