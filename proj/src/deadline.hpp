#pragma once

#include <chrono>

#include "errors.hpp"

namespace gfree {

// Soft time budget threaded through the search routines. Disabled by default.
class Deadline {
 public:
  Deadline() = default;

  static Deadline in_ms(long ms) {
    Deadline d;
    if (ms > 0) {
      d.enabled_ = true;
      d.at_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
    }
    return d;
  }

  bool enabled() const { return enabled_; }

  bool expired() const {
    return enabled_ && std::chrono::steady_clock::now() >= at_;
  }

  void check(const char* what) const {
    if (expired()) throw Timeout(what);
  }

  // Cheap periodic check for tight loops; hits the clock every 1024 ticks.
  void tick(const char* what) const {
    if (!enabled_) return;
    if ((++ticks_ & 1023) == 0) check(what);
  }

 private:
  bool enabled_ = false;
  std::chrono::steady_clock::time_point at_{};
  mutable unsigned ticks_ = 0;
};

}  // namespace gfree
