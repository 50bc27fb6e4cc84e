#pragma once

// Batch verification grid over genus-one knots K([2m, +-2n]).

#include <cstdint>
#include <string>
#include <vector>

#include "bridge/slope.hpp"

namespace bridge {

enum class CheckStatus { pass, fail, unsupported };
std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  double elapsed_ms = 0;
  std::string counterexample;  // empty unless failed; a note when unsupported
};

struct KnotReport {
  GenusOneKnot knot{1, 1, 1};
  bool truncated = false;  // cell skipped after the time limit was reached
  std::vector<CheckRecord> checks;

  bool failed() const;
};

struct VerifyFlags {
  bool scan = false;
  int scan_letters = 4;
  double scan_tol = 1e-9;
  int jobs = 1;
  double time_limit_s = 0;  // 0 means unlimited
};

struct VerificationReport {
  std::int64_t m_max = 0;
  std::int64_t n_max = 0;
  VerifyFlags flags;
  std::vector<KnotReport> knots;  // ordered by (m, n, sign) with + before -

  bool truncated() const;
  bool failed() const;
  /// 0 all pass, 1 any failure, 3 truncated without failure.
  int exit_code() const;
};

/// Names of the checks run for every knot, in report order.
std::vector<std::string> battery(const VerifyFlags& flags);

KnotReport verify_knot(const GenusOneKnot& k, const VerifyFlags& flags);

/// Throws DomainError if m_max or n_max < 1.
VerificationReport verify_all(std::int64_t m_max, std::int64_t n_max, const VerifyFlags& flags);

}  // namespace bridge
