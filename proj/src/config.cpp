#include <gencx/config.hpp>

#include <atomic>

#ifndef GENCX_CROSS_CHECKS_DEFAULT
#define GENCX_CROSS_CHECKS_DEFAULT 1
#endif

namespace gencx {
namespace {
std::atomic<bool> g_cross_checks{GENCX_CROSS_CHECKS_DEFAULT != 0};
}

bool cross_checks_enabled() { return g_cross_checks.load(std::memory_order_relaxed); }
void set_cross_checks(bool enabled) { g_cross_checks.store(enabled, std::memory_order_relaxed); }

}  // namespace gencx
