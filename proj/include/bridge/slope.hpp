#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bridge {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced rational number with positive denominator, or infinity (1/0).
///
/// Infinity is a single unsigned point: any k/0 with k != 0 normalizes to 1/0.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(BigInt num, BigInt den = 1);  // NOLINT(google-explicit-constructor)

  static Fraction infinity() { return Fraction(1, 0); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  Fraction operator-() const;
  friend Fraction operator+(const Fraction& x, const Fraction& y);
  friend Fraction operator-(const Fraction& x, const Fraction& y);
  friend Fraction operator*(const Fraction& x, const Fraction& y);
  friend Fraction operator/(const Fraction& x, const Fraction& y);

  friend bool operator==(const Fraction&, const Fraction&) = default;
  /// Total order on finite values; infinity sorts after every finite value.
  friend std::strong_ordering operator<=>(const Fraction& x, const Fraction& y);

  /// `q/p`, `q`, or `inf`.
  std::string to_string() const;
  static Fraction parse(std::string_view text);

 private:
  BigInt num_;
  BigInt den_;
};

/// Nested continued fraction 1/(a_1 + 1/(a_2 + ... + 1/a_k)).
struct ContinuedFraction {
  std::vector<BigInt> coeffs;
};

Fraction cf_value(const ContinuedFraction& cf);

/// The genus-one 2-bridge knot K([2m, +-2n]).
class GenusOneKnot {
 public:
  GenusOneKnot(std::int64_t m, std::int64_t n, int sign);

  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  int sign() const { return sign_; }
  bool plus() const { return sign_ > 0; }

  /// p = 4mn + sign
  std::int64_t p() const { return 4 * m_ * n_ + sign_; }
  /// q = 2n
  std::int64_t q() const { return 2 * n_; }

  ContinuedFraction continued_fraction() const;
  std::string to_string() const;

  friend bool operator==(const GenusOneKnot&, const GenusOneKnot&) = default;

 private:
  std::int64_t m_;
  std::int64_t n_;
  int sign_;
};

Fraction genus_one_fraction(const GenusOneKnot& k);

/// Recovers (m, n, sign) from q/p = 2n/(4mn +- 1), if the slope has that form.
std::optional<GenusOneKnot> genus_one_params(const Fraction& f);

bool cf_identity_check(std::int64_t m, std::int64_t n);

/// q'/p with q q' = 1 (mod p) and 0 < q' < p.
Fraction r_prime(const Fraction& f);

/// Modular inverse of q mod p (p >= 2, gcd(p, q) = 1), in [1, p).
BigInt mod_inverse(const BigInt& q, const BigInt& p);

/// Narrowing conversion that throws DomainError when out of range.
std::int64_t to_int64(const BigInt& x);

}  // namespace bridge
