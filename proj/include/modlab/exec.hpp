#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modlab::exec {

enum class Policy { serial, parallel };

// Process-wide switch between the OpenMP kernels and their serial reference
// twins. Defaults to parallel when built with OpenMP.
Policy policy();
void set_policy(Policy p);

// Scoped override, used by tests to compare both paths.
struct PolicyGuard {
  explicit PolicyGuard(Policy p) : saved_(policy()) { set_policy(p); }
  ~PolicyGuard() { set_policy(saved_); }

 private:
  Policy saved_;
};

inline constexpr uint64_t kNoIndex = std::numeric_limits<uint64_t>::max();

struct SweepOutcome {
  uint64_t counted = 0;     // indices where the first predicate held
  uint64_t first_fail = kNoIndex;  // least counted index that also failed
};

namespace detail {
template <class Fn>
SweepOutcome sweep_serial(uint64_t n, Fn&& fn) {
  SweepOutcome out;
  for (uint64_t i = 0; i < n; ++i) {
    auto [counted, failed] = fn(i);
    if (!counted) continue;
    ++out.counted;
    if (failed && out.first_fail == kNoIndex) out.first_fail = i;
  }
  return out;
}

template <class Fn>
SweepOutcome sweep_parallel(uint64_t n, Fn&& fn) {
  uint64_t counted = 0;
  uint64_t first = kNoIndex;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : counted) \
    reduction(min : first)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    auto [c, failed] = fn(static_cast<uint64_t>(i));
    if (!c) continue;
    ++counted;
    if (failed) first = std::min(first, static_cast<uint64_t>(i));
  }
  return SweepOutcome{counted, first};
}
}  // namespace detail

// Scans [0, n). fn(i) returns {counted, failed}. Counts the counted indices
// and reports the least counted index that failed, independent of schedule.
// fn must not throw; callers check caps before entering the sweep.
template <class Fn>
SweepOutcome sweep(uint64_t n, Fn&& fn) {
  if (policy() == Policy::serial) return detail::sweep_serial(n, fn);
  return detail::sweep_parallel(n, fn);
}

// Least index in [0, n) where pred holds, or nullopt.
template <class Pred>
std::optional<uint64_t> find_first(uint64_t n, Pred&& pred) {
  auto out = sweep(n, [&](uint64_t i) {
    bool hit = pred(i);
    return std::pair<bool, bool>(hit, hit);
  });
  if (out.first_fail == kNoIndex) return std::nullopt;
  return out.first_fail;
}

// Independent per-index work writing into disjoint slots.
template <class Fn>
void for_each_index(uint64_t n, Fn&& fn) {
  if (policy() == Policy::serial) {
    for (uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    fn(static_cast<uint64_t>(i));
}

}  // namespace modlab::exec
