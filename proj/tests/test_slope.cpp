#include <doctest.h>

#include <numeric>

#include "bridge/errors.hpp"
#include "bridge/slope.hpp"

using namespace bridge;

namespace {

// Continued fraction evaluated bottom-up with plain integers.
std::pair<std::int64_t, std::int64_t> naive_cf(const std::vector<std::int64_t>& a) {
  std::int64_t num = 1, den = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    // value = 1 / (a_i + num/den)
    std::int64_t nn = den;
    std::int64_t nd = a[i] * den + num;
    num = nn;
    den = nd;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace

TEST_CASE("fraction normalization") {
  CHECK(Fraction(4, 10) == Fraction(2, 5));
  CHECK(Fraction(2, -5) == Fraction(-2, 5));
  CHECK(Fraction(-3, 0) == Fraction::infinity());
  CHECK(Fraction(7, 0).to_string() == "inf");
  CHECK(Fraction(6, 3).to_string() == "2");
  CHECK_THROWS_AS(Fraction(0, 0), DomainError);
  CHECK(Fraction::parse("-4/6") == Fraction(-2, 3));
  CHECK(Fraction::parse("inf").is_infinite());
  CHECK(Fraction(1, 3) < Fraction(1, 2));
  CHECK(Fraction(100) < Fraction::infinity());
  CHECK_THROWS_AS(Fraction::infinity() + Fraction(1), DegenerateValue);
}

TEST_CASE("cf_value examples") {
  CHECK(cf_value({{2, 2}}) == Fraction(2, 5));
  CHECK(cf_value({{4, -4}}) == Fraction(4, 15));
  CHECK(cf_value({{2}}) == Fraction(1, 2));
  CHECK_THROWS_AS(cf_value({{1, -1}}), DegenerateValue);
  CHECK_THROWS_AS(cf_value({{0}}), DomainError);
  CHECK_THROWS(cf_value({{}}));
}

TEST_CASE("genus_one_fraction examples and cf agreement") {
  CHECK(genus_one_fraction(GenusOneKnot(1, 1, 1)) == Fraction(2, 5));
  CHECK(genus_one_fraction(GenusOneKnot(1, 1, -1)) == Fraction(2, 3));
  CHECK(genus_one_fraction(GenusOneKnot(2, 3, 1)) == Fraction(6, 25));
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t n = 1; n <= 12; ++n) {
      for (int s : {1, -1}) {
        GenusOneKnot k(m, n, s);
        auto [num, den] = naive_cf({2 * m, s * 2 * n});
        CHECK(genus_one_fraction(k) == Fraction(num, den));
        CHECK(cf_value(k.continued_fraction()) == genus_one_fraction(k));
        auto back = genus_one_params(genus_one_fraction(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
      }
    }
  }
  CHECK_THROWS_AS(GenusOneKnot(0, 1, 1), DomainError);
  CHECK_FALSE(genus_one_params(Fraction(3, 7)).has_value());
  CHECK_FALSE(genus_one_params(Fraction(1, 3)).has_value());
}

TEST_CASE("cf identity [2m,-2n] = [2m-1,1,2n-1]") {
  CHECK(cf_identity_check(1, 1));
  CHECK(cf_identity_check(2, 2));
  CHECK(cf_identity_check(5, 3));
  for (std::int64_t m = 1; m <= 15; ++m) {
    for (std::int64_t n = 1; n <= 15; ++n) {
      auto lhs = naive_cf({2 * m, -2 * n});
      auto rhs = naive_cf({2 * m - 1, 1, 2 * n - 1});
      CHECK(lhs == rhs);
      CHECK(cf_identity_check(m, n));
    }
  }
}

TEST_CASE("r_prime") {
  CHECK(r_prime(Fraction(2, 5)) == Fraction(3, 5));
  CHECK(r_prime(Fraction(1, 3)) == Fraction(1, 3));
  CHECK(r_prime(Fraction(4, 15)) == Fraction(4, 15));
  for (std::int64_t p = 3; p < 60; p += 2) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      Fraction r(q, p);
      Fraction rp = r_prime(r);
      CHECK(r_prime(rp) == r);
      CHECK((BigInt(q) * rp.num()) % p == 1);
    }
  }
  for (std::int64_t m = 1; m <= 50; ++m) {
    std::int64_t p = 4 * m * m - 1, q = 2 * m;
    CHECK((q * q) % p == 1 % p);
  }
}
