#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modlab/envelope.hpp"
#include "modlab/exec.hpp"
#include "modlab/theorems.hpp"

using namespace modlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Workload {
  std::string name;
  std::function<uint64_t()> run;  // returns a checksum for agreement checks
};

double time_ms(const std::function<uint64_t()>& fn, int repeat,
               uint64_t& checksum) {
  checksum = fn();  // warm once, keep the value
  Clock::time_point t0 = Clock::now();
  for (int i = 0; i < repeat; ++i) checksum = fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0)
             .count() /
         repeat;
}

}  // namespace

int main(int argc, char** argv) {
  int repeat = 3;
  CLI::App app{"Compare the serial reference kernels with the OpenMP ones"};
  app.add_option("--repeat", repeat, "Timed runs per measurement")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("kernels: OpenMP build\n");
#else
  std::printf("kernels: built without OpenMP, both columns run serially\n");
#endif

  AlgebraPtr a3 = ring_fan3(3);
  RightModule wide = direct_sum({simple_module(a3, 1),
                                 indecomposable_injective(a3, 2),
                                 indecomposable_injective(a3, 2),
                                 indecomposable_injective(a3, 3)});
  AlgebraPtr a4 = ring_fan4(3);
  RightModule triple = direct_sum({indecomposable_injective(a4, 2),
                                   indecomposable_injective(a4, 3),
                                   indecomposable_injective(a4, 4)});

  std::vector<Workload> workloads;
  workloads.push_back({"hull-unit-sweep", [&] {
                         UnitSweep s = automorphism_sweep(wide);
                         return s.units + 1000 * s.elements +
                                (s.invariant ? 1 : 0);
                       }});
  workloads.push_back({"pseudo-injective-sweep", [&] {
                         CheckResult r = is_pseudo_injective(triple);
                         return uint64_t(r.value ? 1 : 2);
                       }});
  workloads.push_back({"census-fan3-gf3", [&] {
                         Census c = build_census(
                             a3, {{1, 1}, {2, 1}, {3, 1}}, 6);
                         return uint64_t(c.representatives.size());
                       }});

  std::printf("%-24s %12s %12s %9s %7s\n", "workload", "serial ms",
              "parallel ms", "speedup", "agree");
  bool all_agree = true;
  for (const Workload& w : workloads) {
    uint64_t serial_sum = 0, parallel_sum = 0;
    double serial_ms, parallel_ms;
    {
      exec::PolicyGuard g(exec::Policy::serial);
      serial_ms = time_ms(w.run, repeat, serial_sum);
    }
    {
      exec::PolicyGuard g(exec::Policy::parallel);
      parallel_ms = time_ms(w.run, repeat, parallel_sum);
    }
    bool agree = serial_sum == parallel_sum;
    all_agree = all_agree && agree;
    std::printf("%-24s %12.2f %12.2f %8.2fx %7s\n", w.name.c_str(),
                serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                agree ? "yes" : "NO");
  }
  return all_agree ? 0 : 1;
}
