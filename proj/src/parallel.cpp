// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "annulus/parallel.hpp"

#include <atomic>

namespace annulus::threading {

namespace {
std::atomic<bool> g_enabled{true};
}

void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }
bool enabled() { return g_enabled.load(std::memory_order_relaxed); }

}  // namespace annulus::threading
