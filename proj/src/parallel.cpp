#include "hyperfourier/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperfourier {

namespace {

int threads_from_env() {
  const char* env = std::getenv("HYPERFOURIER_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    const int n = std::stoi(env);
    return n < 0 ? 0 : n;
  } catch (const std::exception&) {
    return 0;
  }
}

std::atomic<int>& thread_cap() {
  static std::atomic<int> cap{threads_from_env()};
  return cap;
}

std::mutex& sink_mutex() {
  static std::mutex m;
  return m;
}

WarningSink& sink() {
  static WarningSink s = [](std::string_view msg) { std::cerr << "warning: " << msg << '\n'; };
  return s;
}

}  // namespace

int worker_threads() {
#ifdef _OPENMP
  const int cap = thread_cap().load();
  return cap > 0 ? cap : omp_get_max_threads();
#else
  return 1;
#endif
}

void set_worker_threads(int n) { thread_cap().store(n < 0 ? 0 : n); }

void set_warning_sink(WarningSink s) {
  std::lock_guard lock(sink_mutex());
  sink() = std::move(s);
}

void warn(std::string_view message) {
  std::lock_guard lock(sink_mutex());
  if (sink()) sink()(message);
}

}  // namespace hyperfourier
