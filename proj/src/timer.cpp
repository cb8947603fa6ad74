#include <chrono>
#include <cstdlib>

#include "dio/bench.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define DIO_HAVE_RDTSC 1
#include <x86intrin.h>
#else
#define DIO_HAVE_RDTSC 0
#endif

namespace dio {

namespace {

bool fallback_forced() {
  const char* v = std::getenv(kTimerFallbackEnv);
  return v != nullptr && v[0] != '\0' && !(v[0] == '0' && v[1] == '\0');
}

std::uint64_t steady_now() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

}  // namespace

std::string_view timer_backend_id(TimerBackend b) {
  switch (b) {
    case TimerBackend::auto_detect: return "auto";
    case TimerBackend::rdtsc: return "rdtsc";
    case TimerBackend::steady: return "steady";
  }
  return "?";
}

std::optional<TimerBackend> timer_backend_from_id(std::string_view s) {
  if (s == "auto") return TimerBackend::auto_detect;
  if (s == "rdtsc") return TimerBackend::rdtsc;
  if (s == "steady") return TimerBackend::steady;
  return std::nullopt;
}

Timer Timer::make(TimerBackend requested) {
  const bool forced = fallback_forced();
  if (requested == TimerBackend::rdtsc) {
    if (!DIO_HAVE_RDTSC)
      fail(Error::Code::timer_unavailable, "rdtsc is not available on this platform");
    if (forced)
      fail(Error::Code::timer_unavailable,
           "rdtsc requested but DIO_TIMER_FALLBACK forces the fallback timer");
    return Timer(true);
  }
  if (requested == TimerBackend::steady || forced) return Timer(false);
  return Timer(DIO_HAVE_RDTSC != 0);
}

#if DIO_HAVE_RDTSC

std::uint64_t Timer::begin() const {
  if (!rdtsc_) return steady_now();
  _mm_lfence();  // serialize against earlier instructions
  std::uint64_t t = __rdtsc();
  _mm_lfence();
  return t;
}

std::uint64_t Timer::end() const {
  if (!rdtsc_) return steady_now();
  unsigned aux;
  std::uint64_t t = __rdtscp(&aux);  // waits for preceding instructions
  _mm_lfence();
  return t;
}

#else

std::uint64_t Timer::begin() const { return steady_now(); }
std::uint64_t Timer::end() const { return steady_now(); }

#endif

}  // namespace dio
