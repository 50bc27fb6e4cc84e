#include "bridge/slope.hpp"

#include <boost/integer/common_factor.hpp>

#include "bridge/errors.hpp"

namespace bridge {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt gcd_big(const BigInt& x, const BigInt& y) {
  return boost::multiprecision::gcd(abs_big(x), abs_big(y));
}

}  // namespace

Fraction::Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    if (num_ == 0) throw DomainError("0/0 is not a fraction");
    num_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd_big(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Fraction Fraction::operator-() const {
  if (is_infinite()) return *this;
  return Fraction(-num_, den_);
}

Fraction operator+(const Fraction& x, const Fraction& y) {
  if (x.is_infinite() || y.is_infinite()) throw DegenerateValue("arithmetic on infinity");
  return Fraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Fraction operator-(const Fraction& x, const Fraction& y) { return x + (-y); }

Fraction operator*(const Fraction& x, const Fraction& y) {
  if (x.is_infinite() || y.is_infinite()) throw DegenerateValue("arithmetic on infinity");
  return Fraction(x.num_ * y.num_, x.den_ * y.den_);
}

Fraction operator/(const Fraction& x, const Fraction& y) {
  if (x.is_infinite() || y.is_infinite()) throw DegenerateValue("arithmetic on infinity");
  if (y.num_ == 0) throw DegenerateValue("division by zero");
  return Fraction(x.num_ * y.den_, x.den_ * y.num_);
}

std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) {
  if (x.is_infinite() || y.is_infinite()) {
    return static_cast<int>(x.is_infinite()) <=> static_cast<int>(y.is_infinite());
  }
  BigInt lhs = x.num_ * y.den_;
  BigInt rhs = y.num_ * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Fraction::to_string() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Fraction Fraction::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "1/0") return infinity();
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw DomainError("malformed fraction: '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw DomainError("malformed fraction: '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') {
        throw DomainError("malformed fraction: '" + std::string(text) + "'");
      }
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text), 1);
  return Fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Fraction cf_value(const ContinuedFraction& cf) {
  if (cf.coeffs.empty()) throw DomainError("empty continued fraction");
  // Evaluate from the innermost term outward: x <- 1/(a_i + x).
  Fraction x(0);
  for (auto it = cf.coeffs.rbegin(); it != cf.coeffs.rend(); ++it) {
    if (*it == 0) throw DomainError("continued fraction coefficients must be nonzero");
    Fraction denom = Fraction(*it) + x;
    if (denom.num() == 0) throw DegenerateValue("continued fraction evaluates through 1/0");
    x = Fraction(denom.den(), denom.num());
  }
  return x;
}

GenusOneKnot::GenusOneKnot(std::int64_t m, std::int64_t n, int sign) : m_(m), n_(n), sign_(sign) {
  if (m < 1 || n < 1) throw DomainError("genus-one knot needs m, n >= 1");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (m > (std::int64_t{1} << 28) || n > (std::int64_t{1} << 28)) {
    throw DomainError("genus-one knot parameters too large");
  }
}

ContinuedFraction GenusOneKnot::continued_fraction() const {
  return ContinuedFraction{{BigInt(2 * m_), BigInt(2 * n_ * sign_)}};
}

std::string GenusOneKnot::to_string() const {
  return "[" + std::to_string(2 * m_) + "," + (sign_ > 0 ? "" : "-") + std::to_string(2 * n_) + "]";
}

Fraction genus_one_fraction(const GenusOneKnot& k) { return Fraction(k.q(), k.p()); }

std::optional<GenusOneKnot> genus_one_params(const Fraction& f) {
  if (f.is_infinite() || f.num() <= 0 || f.num() >= f.den()) return std::nullopt;
  if (f.num() % 2 != 0) return std::nullopt;
  const BigInt n = f.num() / 2;
  for (int sign : {1, -1}) {
    BigInt rest = f.den() - sign;
    if (rest > 0 && rest % (4 * n) == 0) {
      BigInt m = rest / (4 * n);
      if (m >= 1) return GenusOneKnot(to_int64(m), to_int64(n), sign);
    }
  }
  return std::nullopt;
}

bool cf_identity_check(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw DomainError("cf_identity_check needs m, n >= 1");
  Fraction lhs = cf_value({{BigInt(2 * m), BigInt(-2 * n)}});
  Fraction rhs = cf_value({{BigInt(2 * m - 1), BigInt(1), BigInt(2 * n - 1)}});
  return lhs == rhs;
}

BigInt mod_inverse(const BigInt& q, const BigInt& p) {
  if (p < 2) throw DomainError("modulus must be at least 2");
  // Extended Euclid on (q mod p, p).
  BigInt r0 = p, r1 = ((q % p) + p) % p;
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt quot = r0 / r1;
    BigInt r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    BigInt t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw DomainError("not invertible: gcd(" + q.str() + ", " + p.str() + ") != 1");
  return ((t0 % p) + p) % p;
}

Fraction r_prime(const Fraction& f) {
  if (f.is_infinite() || f.num() <= 0 || f.num() >= f.den()) {
    throw DomainError("r_prime needs 0 < q < p, got " + f.to_string());
  }
  return Fraction(mod_inverse(f.num(), f.den()), f.den());
}

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("integer out of 64-bit range: " + x.str());
  }
  return x.convert_to<std::int64_t>();
}

}  // namespace bridge
