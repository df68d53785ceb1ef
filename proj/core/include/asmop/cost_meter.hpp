// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstdint>

namespace asmop {

/// Counts the paper's computational cost unit: n-dimensional scalar products
/// performed by oracle evaluations. Safe for concurrent increments; a run's
/// reported cost and its diagnostics are kept on separate meters.
class CostMeter {
 public:
  void add(std::int64_t count = 1) noexcept {
    count_.fetch_add(count, std::memory_order_relaxed);
  }

  std::int64_t scalar_products() const noexcept {
    return count_.load(std::memory_order_relaxed);
  }

  void reset() noexcept { count_.store(0, std::memory_order_relaxed); }

 private:
  std::atomic<std::int64_t> count_{0};
};

}  // namespace asmop
