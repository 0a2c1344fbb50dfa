/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <cstdint>

namespace rigidlcp::ops {

/// Multiply-accumulate counter for the instrumented kernels. The counter is
/// thread local so concurrent solves do not interfere with each other.
std::uint64_t mac_count();
void reset_mac_count();
void add_macs(std::uint64_t n);

/// Records the MACs spent inside a scope.
class MacScope {
 public:
  MacScope() : start_(mac_count()) {}
  std::uint64_t elapsed() const { return mac_count() - start_; }

 private:
  std::uint64_t start_;
};

}  // namespace rigidlcp::ops
