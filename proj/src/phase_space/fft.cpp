#include "kvn/phase_space/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "kvn/errors.hpp"

namespace kvn::phase_space {

namespace {

// rows, cols, along_p, sign
using PlanKey = std::tuple<Eigen::Index, Eigen::Index, bool, int>;

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

int read_thread_env() {
  const int hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("KVN_THREADS");
  if (env == nullptr) return hw;
  const int n = std::atoi(env);
  return n >= 1 ? std::min(n, hw) : 1;
}

void init_threads_once() {
  static const bool done = [] {
    fftw_init_threads();
    fftw_plan_with_nthreads(fft_threads());
    return true;
  }();
  (void)done;
}

fftw_plan plan_for(Eigen::MatrixXcd& a, bool along_p, int sign) {
  std::lock_guard lock(planner_mutex());
  init_threads_once();
  static std::map<PlanKey, fftw_plan> cache;
  const PlanKey key{a.rows(), a.cols(), along_p, sign};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  // Plan on scratch storage so the caller's data is never touched by the planner.
  Eigen::MatrixXcd scratch(rows, cols);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  fftw_plan plan = nullptr;
  if (along_p) {
    int n[] = {cols};
    plan = fftw_plan_many_dft(1, n, rows, buf, nullptr, rows, 1, buf, nullptr, rows, 1, sign, flags);
  } else {
    int n[] = {rows};
    plan = fftw_plan_many_dft(1, n, cols, buf, nullptr, 1, rows, buf, nullptr, 1, rows, sign, flags);
  }
  if (plan == nullptr) throw ContractError("fftw: could not create a plan");
  cache.emplace(key, plan);
  return plan;
}

void run(Eigen::MatrixXcd& a, bool along_p, int sign) {
  if (sign != -1 && sign != 1) throw ContractError("fft: sign must be -1 or +1");
  fftw_plan plan = plan_for(a, along_p, sign);
  auto* data = reinterpret_cast<fftw_complex*>(a.data());
  fftw_execute_dft(plan, data, data);
}

}  // namespace

int fft_threads() {
  static const int n = read_thread_env();
  return n;
}

void fft_along_q(Eigen::MatrixXcd& a, int sign) { run(a, false, sign); }
void fft_along_p(Eigen::MatrixXcd& a, int sign) { run(a, true, sign); }

}  // namespace kvn::phase_space
