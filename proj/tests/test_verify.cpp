#include <doctest.h>

#include "bridge/errors.hpp"
#include "bridge/verify.hpp"

using namespace bridge;

namespace {

const CheckRecord& find(const KnotReport& k, const std::string& name) {
  for (const CheckRecord& c : k.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST_CASE("grid ordering, battery completeness and determinism across jobs") {
  VerifyFlags f;
  VerificationReport one = verify_all(2, 2, f);
  f.jobs = 3;
  VerificationReport three = verify_all(2, 2, f);
  REQUIRE(one.knots.size() == 8);
  std::vector<std::string> names = battery(f);
  for (std::size_t i = 0; i < one.knots.size(); ++i) {
    const KnotReport& k = one.knots[i];
    CHECK(k.knot == three.knots[i].knot);
    CHECK(k.knot.m() == static_cast<std::int64_t>(i / 4) + 1);
    CHECK(k.knot.n() == static_cast<std::int64_t>((i / 2) % 2) + 1);
    CHECK(k.knot.sign() == (i % 2 == 0 ? 1 : -1));
    REQUIRE(k.checks.size() == names.size());
    for (std::size_t c = 0; c < names.size(); ++c) {
      CHECK(k.checks[c].name == names[c]);
      CHECK(k.checks[c].status == three.knots[i].checks[c].status);
    }
  }
}

TEST_CASE("trefoil cell marks the closed form unsupported and passes the bound check") {
  KnotReport k = verify_knot(GenusOneKnot(1, 1, -1), VerifyFlags{});
  CHECK(find(k, "claim2_closed_form").status == CheckStatus::unsupported);
  CHECK(find(k, "claim2_forbidden_terms").status == CheckStatus::pass);
  CHECK(find(k, "C4").status == CheckStatus::pass);
  CHECK(find(k, "T4").status == CheckStatus::pass);
  CHECK(find(k, "theorem2").status == CheckStatus::unsupported);
}

TEST_CASE("family check applies only on the minus diagonal") {
  KnotReport k = verify_knot(GenusOneKnot(2, 2, -1), VerifyFlags{});
  CHECK(find(k, "theorem2").status == CheckStatus::pass);
  CHECK(find(verify_knot(GenusOneKnot(2, 2, 1), VerifyFlags{}), "theorem2").status == CheckStatus::unsupported);
}

TEST_CASE("exit codes") {
  CHECK_THROWS_AS(verify_all(0, 1, VerifyFlags{}), DomainError);
  VerificationReport plus_only;
  plus_only.knots.push_back(verify_knot(GenusOneKnot(2, 2, 1), VerifyFlags{}));
  CHECK(plus_only.exit_code() == 0);
  KnotReport truncated;
  truncated.truncated = true;
  plus_only.knots.push_back(truncated);
  CHECK(plus_only.exit_code() == 3);
  plus_only.knots.push_back(verify_knot(GenusOneKnot(1, 1, -1), VerifyFlags{}));
  CHECK(plus_only.exit_code() == 1);
}

TEST_CASE("optional scan check") {
  VerifyFlags f;
  f.scan = true;
  f.scan_letters = 3;
  KnotReport k = verify_knot(GenusOneKnot(1, 1, 1), f);
  CHECK(k.checks.back().name == "no_relation_scan");
  CHECK(k.checks.back().status == CheckStatus::pass);
}
