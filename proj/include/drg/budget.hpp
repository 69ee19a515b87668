#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "drg/error.hpp"

namespace drg {

// Wall-clock budget for the exhaustive searches.  A non-positive budget means
// unlimited.  check() is cheap enough for inner loops: it only reads the
// clock every 256 calls.
class Deadline {
  public:
    explicit Deadline(double seconds = 0.0) {
        if (seconds > 0.0) {
            limited_ = true;
            end_ = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(seconds));
        }
    }

    void check(const char* what) {
        if (!limited_ || (++ticks_ & 0xff) != 0) return;
        if (std::chrono::steady_clock::now() > end_)
            throw BudgetExceeded(std::string("time budget exceeded in ") + what);
    }

    bool limited() const { return limited_; }

  private:
    bool limited_ = false;
    std::chrono::steady_clock::time_point end_{};
    std::uint32_t ticks_ = 0;
};

}  // namespace drg
