// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace annulus::threading {

/// Enable or disable the OpenMP code paths globally. When disabled every
/// kernel runs its serial reference implementation. Thread-safe to read;
/// intended to be set once at startup (CLI flag, benchmark setup, tests).
void set_enabled(bool on);
bool enabled();

/// Work-size threshold below which parallel dispatch falls back to serial.
inline constexpr std::int64_t kDefaultGrain = 64;

}  // namespace annulus::threading
