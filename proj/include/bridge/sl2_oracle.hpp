#pragma once

// Parabolic SL(2, C) representations a -> [[1,1],[0,1]], b -> [[1,0],[w,1]]
// of a 2-bridge knot group. Used as a numeric nontriviality oracle only:
// margins are reported, nothing is certified.

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "bridge/slope.hpp"
#include "bridge/words.hpp"

namespace bridge {

/// Integer polynomial in one variable, coefficients low degree first, no
/// trailing zeros (the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  static Poly constant(BigInt c) { return Poly({std::move(c)}); }
  static Poly variable() { return Poly({BigInt(0), BigInt(1)}); }

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& leading() const { return c_.back(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Poly& y);
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly derivative() const;
  BigInt content() const;
  /// Divided by its content, leading coefficient positive.
  Poly primitive() const;
  std::complex<long double> eval(std::complex<long double> x) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Pseudo-remainder of x by y (y nonzero).
Poly pseudo_remainder(const Poly& x, const Poly& y);
/// Exact quotient x / y over Q, returned primitive. Throws if y does not divide x.
Poly exact_quotient_primitive(const Poly& x, const Poly& y);
/// Primitive gcd over Z[w]; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& x, const Poly& y);

/// 2x2 matrix with polynomial entries, row-major.
struct PolyMatrix {
  std::array<Poly, 4> e;

  static PolyMatrix identity();
  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
  Poly det() const;
};

PolyMatrix generator_poly_matrix(Letter l);
PolyMatrix evaluate_poly(const Word& w);

struct RileyData {
  Poly gcd;                    // defining polynomial of the parabolic reps
  std::array<Poly, 4> entries;  // rho(u_r) - I
};

RileyData riley_polynomials(const Fraction& f);

using Complex = std::complex<long double>;

struct Mat2 {
  std::array<Complex, 4> e{Complex(1), Complex(0), Complex(0), Complex(1)};

  static Mat2 identity() { return {}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  Mat2 inverse() const;  // assumes det = 1
  Complex trace() const { return e[0] + e[3]; }
  Complex det() const { return e[0] * e[3] - e[1] * e[2]; }
};

struct NumericRep {
  Complex omega;
  Mat2 a;
  Mat2 b;
  long double residual = 0;  // max |rho(u_r) - I| entry
};

Mat2 evaluate(const Word& w, const NumericRep& rep);
Mat2 evaluate(std::span<const Letter> w, const NumericRep& rep);

NumericRep make_rep(Complex omega);

/// Largest entry modulus of x - y.
long double max_entry_distance(const Mat2& x, const Mat2& y);
/// min over s in {+1, -1} of max|M - sI|, normalized by max(1, max|M_ij|).
long double distance_from_pm_identity(const Mat2& m);

/// Distinct roots of the square-free part of polynomial `p`, Newton-polished.
std::vector<Complex> poly_roots(const Poly& p);

/// All representations at roots of the Riley gcd, sorted by (real, imag).
/// Roots whose relator residual exceeds `tol` are dropped and reported in
/// `warnings`.
std::vector<NumericRep> numeric_reps(const Fraction& f, long double tol,
                                     std::vector<std::string>* warnings = nullptr);

}  // namespace bridge
