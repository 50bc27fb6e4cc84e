#include <doctest.h>

#include <numeric>

#include "bridge/presentation.hpp"
#include "oracles.hpp"

using namespace bridge;

TEST_CASE("epsilon_sequence examples") {
  CHECK(epsilon_sequence(5, 2) == std::vector<int>{1, 1, -1, -1});
  CHECK(epsilon_sequence(3, 2) == std::vector<int>{1, -1});
  for (int x : epsilon_sequence(11, 1)) CHECK(x == 1);
}

TEST_CASE("relator examples") {
  CHECK(relator(Fraction(2, 5)).u.representative().to_string() == "abaBAbabAB");
  CHECK(relator(Fraction(2, 3)).u.representative().to_string() == "abAbaB");
  CHECK(relator(Fraction(2, 5)).u_hat.to_string() == "baBA");
}

TEST_CASE("relator matches oracle for coprime slopes") {
  for (std::int64_t p = 3; p <= 41; p += 2) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      Relator rel = relator(p, q);
      std::string u = rel.u.representative().to_string();
      CHECK(u == oracle::relator(p, q));
      CHECK(u.size() == static_cast<std::size_t>(2 * p));
      CHECK(oracle::reduce(u) == u);
      if (q % 2 == 0) {
        CHECK(is_cyclically_alternating(rel.u));
        auto eps = epsilon_sequence(p, q);
        for (std::int64_t i = 1; i < p; ++i) CHECK(eps[i - 1] * eps[p - i - 1] == -1);
      }
    }
  }
}

TEST_CASE("canonical decomposition examples") {
  auto d = canonical_decomposition(GenusOneKnot(1, 1, 1));
  CHECK(d.s1.runs == std::vector<int>{3});
  CHECK(d.s2.runs == std::vector<int>{2});
  d = canonical_decomposition(GenusOneKnot(1, 1, -1));
  CHECK(d.s1.runs == std::vector<int>{2});
  CHECK(d.s2.runs == std::vector<int>{1});
  d = canonical_decomposition(GenusOneKnot(2, 3, -1));
  CHECK(d.s1.runs == std::vector<int>{4, 4, 4, 4, 4});
  CHECK(d.s2.runs == std::vector<int>{3});
}

TEST_CASE("CS closed form sweep, checked against the oracle") {
  CHECK(cyclic_s_sequence(relator(Fraction(2, 5)).u) == CyclicSSequence{{3, 2, 3, 2}});
  CHECK(cyclic_s_sequence(relator(Fraction(2, 3)).u) == CyclicSSequence{{2, 1, 2, 1}});
  for (std::int64_t m = 1; m <= 10; ++m) {
    for (std::int64_t n = 1; n <= 10; ++n) {
      for (int s : {1, -1}) {
        GenusOneKnot k(m, n, s);
        CHECK(verify_cs_closed_form(k));
        auto d = canonical_decomposition(k);
        // S1, S2 are palindromes, so reversal never matters here.
        CHECK(d.s1 == d.s1.reversed());
        CHECK(d.s2 == d.s2.reversed());
        std::vector<int> expect;
        for (int rep = 0; rep < 2; ++rep) {
          expect.insert(expect.end(), d.s1.runs.begin(), d.s1.runs.end());
          expect.insert(expect.end(), d.s2.runs.begin(), d.s2.runs.end());
        }
        auto got = oracle::cyclic_runs(oracle::relator(k.p(), k.q()));
        CHECK(oracle::same_cycle(got, expect));
        int sum = 0;
        for (int x : got) sum += x;
        CHECK(sum == 2 * k.p());
      }
    }
  }
}
