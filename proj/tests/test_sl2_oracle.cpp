#include <doctest.h>

#include <array>
#include <random>

#include "bridge/meridians.hpp"
#include "bridge/presentation.hpp"
#include "bridge/sl2_oracle.hpp"
#include "oracles.hpp"

using namespace bridge;

namespace {

using C = std::complex<double>;
using M = std::array<C, 4>;

M mul(const M& x, const M& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

// Independent double-precision evaluation of a word at omega.
M naive_eval(const std::string& w, C omega) {
  M acc = {1, 0, 0, 1};
  for (char c : w) {
    M g;
    switch (c) {
      case 'a': g = {1, 1, 0, 1}; break;
      case 'A': g = {1, -1, 0, 1}; break;
      case 'b': g = {1, 0, omega, 1}; break;
      default: g = {1, 0, -omega, 1}; break;
    }
    acc = mul(acc, g);
  }
  return acc;
}

double off_identity(const M& m) {
  return std::max({std::abs(m[0] - 1.0), std::abs(m[1]), std::abs(m[2]), std::abs(m[3] - 1.0)});
}

}  // namespace

TEST_CASE("poly arithmetic and gcd") {
  Poly x = Poly::variable();
  Poly one = Poly::constant(1);
  Poly p = (x + one) * (x - one);
  Poly q = (x + one) * (x + one) * Poly::constant(3);
  CHECK(poly_gcd(p, q) == x + one);
  CHECK(p.derivative() == x * Poly::constant(2));
  CHECK(Poly({BigInt(4), BigInt(6)}).primitive() == Poly({BigInt(2), BigInt(3)}));
  CHECK(poly_gcd(x * x + one, x + one).degree() == 0);
}

TEST_CASE("generator images and evaluation") {
  NumericRep rep = make_rep(Complex(0.3L, 0.7L));
  Mat2 a = evaluate(Word::parse("a"), rep);
  CHECK(a.e[0] == Complex(1));
  CHECK(a.e[1] == Complex(1));
  CHECK(a.e[2] == Complex(0));
  CHECK(a.e[3] == Complex(1));
  Mat2 id = evaluate(Word(), rep);
  CHECK(max_entry_distance(id, Mat2{{1, 0, 0, 1}}) == 0);
  Word w = Word::parse("abABBaab");
  CHECK(max_entry_distance(evaluate(w + w.inverse(), rep), id) < 1e-15L);
  CHECK(std::abs(evaluate(w, rep).det() - Complex(1)) < 1e-12L);
  CHECK(distance_from_pm_identity(Mat2{{-1, 0, 0, -1}}) == 0);
}

TEST_CASE("Riley polynomials of small knots") {
  RileyData fig8 = riley_polynomials(Fraction(2, 5));
  CHECK(fig8.gcd.degree() >= 1);
  auto roots = poly_roots(fig8.gcd);
  bool non_real = false;
  for (auto z : roots) non_real = non_real || std::abs(z.imag()) > 1e-6L;
  CHECK(non_real);

  std::vector<NumericRep> tref = numeric_reps(Fraction(2, 3), 1e-9L);
  REQUIRE_FALSE(tref.empty());
  CHECK(tref.front().residual < 1e-12L);
  CHECK(!numeric_reps(Fraction(2, 5), 1e-9L).empty());
}

TEST_CASE("reps kill the relator, independent evaluation") {
  for (const Fraction& f : {Fraction(2, 3), Fraction(2, 5), Fraction(4, 7), Fraction(4, 9), Fraction(6, 25)}) {
    std::string u = relator(f).u.representative().to_string();
    std::vector<NumericRep> reps = numeric_reps(f, 1e-9L);
    REQUIRE_FALSE(reps.empty());
    for (std::size_t i = 1; i < reps.size(); ++i) {
      CHECK((reps[i - 1].omega.real() < reps[i].omega.real() ||
             (reps[i - 1].omega.real() == reps[i].omega.real() && reps[i - 1].omega.imag() <= reps[i].omega.imag())));
    }
    for (const NumericRep& r : reps) {
      C om(static_cast<double>(r.omega.real()), static_cast<double>(r.omega.imag()));
      CHECK(off_identity(naive_eval(u, om)) < 1e-8);
    }
    CHECK(off_identity(naive_eval(u, C(0.123, 0.456))) > 1e-3);
  }
}

TEST_CASE("long meridians are parabolic at every rep") {
  for (std::int64_t m = 1; m <= 2; ++m) {
    for (std::int64_t n = 1; n <= 2; ++n) {
      for (int s : {1, -1}) {
        GenusOneKnot k(m, n, s);
        MeridianWords mw = closed_form(k);
        for (const NumericRep& r : numeric_reps(genus_one_fraction(k), 1e-9L)) {
          CHECK(std::abs(std::abs(evaluate(mw.x_l.word(), r).trace()) - 2.0L) < 1e-9L);
          CHECK(std::abs(std::abs(evaluate(mw.y_l.word(), r).trace()) - 2.0L) < 1e-9L);
        }
      }
    }
  }
}

TEST_CASE("evaluate is multiplicative on random words") {
  std::mt19937_64 rng(11);
  NumericRep rep = make_rep(Complex(-0.5L, 0.8660254037844386L));
  for (int i = 0; i < 200; ++i) {
    Word x = Word::parse(oracle::random_word(rng, 20));
    Word y = Word::parse(oracle::random_word(rng, 20));
    Mat2 lhs = evaluate(x + y, rep);
    Mat2 rhs = evaluate(x, rep) * evaluate(y, rep);
    CHECK(max_entry_distance(lhs, rhs) < 1e-9L);
  }
}
