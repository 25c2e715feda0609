#include "modlab/exec.hpp"

#include <atomic>

namespace modlab::exec {

namespace {
std::atomic<Policy> g_policy{
#ifdef _OPENMP
    Policy::parallel
#else
    Policy::serial
#endif
};
}  // namespace

Policy policy() { return g_policy.load(std::memory_order_relaxed); }
void set_policy(Policy p) { g_policy.store(p, std::memory_order_relaxed); }

}  // namespace modlab::exec
