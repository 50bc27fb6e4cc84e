#pragma once

#include <string>

namespace bridge {

/// Result of a verification routine: pass/fail plus the first counterexample.
struct CheckOutcome {
  bool ok = true;
  std::string detail;

  /// Records a failure; keeps only the first message.
  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
  void absorb(const CheckOutcome& other) {
    if (!other.ok) fail(other.detail);
  }
  explicit operator bool() const { return ok; }
};

}  // namespace bridge
