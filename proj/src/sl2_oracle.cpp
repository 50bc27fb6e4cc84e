#include "bridge/sl2_oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "bridge/errors.hpp"
#include "bridge/presentation.hpp"

namespace bridge {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

Poly shift_scale(const Poly& p, int shift, const BigInt& scale) {
  std::vector<BigInt> c(static_cast<std::size_t>(shift), BigInt(0));
  for (const BigInt& x : p.coeffs()) c.push_back(x * scale);
  return Poly(std::move(c));
}

}  // namespace

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator-() const {
  std::vector<BigInt> c = c_;
  for (BigInt& x : c) x = -x;
  return Poly(std::move(c));
}

Poly operator+(const Poly& x, const Poly& y) {
  std::vector<BigInt> c(std::max(x.c_.size(), y.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) c[i] += x.c_[i];
  for (std::size_t i = 0; i < y.c_.size(); ++i) c[i] += y.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<BigInt> c(x.c_.size() + y.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) c[i + j] += x.c_[i] * y.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  std::vector<BigInt> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<long long>(i));
  return Poly(std::move(c));
}

BigInt Poly::content() const {
  BigInt g = 0;
  for (const BigInt& x : c_) g = boost::multiprecision::gcd(g, abs_big(x));
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> c = c_;
  for (BigInt& x : c) x /= g;
  return Poly(std::move(c));
}

std::complex<long double> Poly::eval(std::complex<long double> x) const {
  std::complex<long double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<long double>();
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& x = c_[static_cast<std::size_t>(i)];
    if (x == 0) continue;
    BigInt mag = abs_big(x);
    if (out.empty()) {
      if (x < 0) out += "-";
    } else {
      out += x < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += "w";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Poly pseudo_remainder(const Poly& x, const Poly& y) {
  if (y.is_zero()) throw DomainError("pseudo_remainder by zero polynomial");
  Poly r = x;
  while (!r.is_zero() && r.degree() >= y.degree()) {
    r = shift_scale(r, 0, y.leading()) - shift_scale(y, r.degree() - y.degree(), r.leading());
  }
  return r;
}

Poly exact_quotient_primitive(const Poly& x, const Poly& y) {
  if (y.is_zero()) throw DomainError("division by zero polynomial");
  Poly r = x;
  Poly q;
  while (!r.is_zero() && r.degree() >= y.degree()) {
    const int shift = r.degree() - y.degree();
    const BigInt lead = r.leading();
    q = shift_scale(q, 0, y.leading()) + shift_scale(Poly::constant(lead), shift, BigInt(1));
    r = shift_scale(r, 0, y.leading()) - shift_scale(y, shift, lead);
  }
  if (!r.is_zero()) throw InvariantError("polynomial division is not exact");
  return q.primitive();
}

Poly poly_gcd(const Poly& x, const Poly& y) {
  if (x.is_zero()) return y.primitive();
  if (y.is_zero()) return x.primitive();
  Poly a = x.primitive();
  Poly b = y.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive();
  }
  return a.primitive();
}

PolyMatrix PolyMatrix::identity() {
  return {{Poly::constant(1), Poly(), Poly(), Poly::constant(1)}};
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
  return {{x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
           x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]}};
}

Poly PolyMatrix::det() const { return e[0] * e[3] - e[1] * e[2]; }

PolyMatrix generator_poly_matrix(Letter l) {
  const BigInt s = l.sign;
  if (l.gen == Gen::A) return {{Poly::constant(1), Poly::constant(s), Poly(), Poly::constant(1)}};
  return {{Poly::constant(1), Poly(), Poly({BigInt(0), s}), Poly::constant(1)}};
}

PolyMatrix evaluate_poly(const Word& w) {
  PolyMatrix acc = PolyMatrix::identity();
  for (Letter l : w.letters()) acc = acc * generator_poly_matrix(l);
  return acc;
}

RileyData riley_polynomials(const Fraction& f) {
  Relator rel = relator(f);
  PolyMatrix m = evaluate_poly(rel.u.representative().word());
  RileyData data;
  data.entries = {m.e[0] - Poly::constant(1), m.e[1], m.e[2], m.e[3] - Poly::constant(1)};
  Poly g;
  for (const Poly& p : data.entries) g = poly_gcd(g, p);
  if (g.is_zero()) throw InvariantError("relator image is the identity polynomial matrix");
  data.gcd = g;
  return data;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {{x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
           x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]}};
}

Mat2 Mat2::inverse() const { return {{e[3], -e[1], -e[2], e[0]}}; }

NumericRep make_rep(Complex omega) {
  NumericRep rep;
  rep.omega = omega;
  rep.a = {{Complex(1), Complex(1), Complex(0), Complex(1)}};
  rep.b = {{Complex(1), Complex(0), omega, Complex(1)}};
  return rep;
}

Mat2 evaluate(std::span<const Letter> w, const NumericRep& rep) {
  const Mat2 a_inv = rep.a.inverse();
  const Mat2 b_inv = rep.b.inverse();
  Mat2 acc = Mat2::identity();
  for (Letter l : w) {
    if (l.gen == Gen::A) {
      acc = acc * (l.sign > 0 ? rep.a : a_inv);
    } else {
      acc = acc * (l.sign > 0 ? rep.b : b_inv);
    }
  }
  return acc;
}

Mat2 evaluate(const Word& w, const NumericRep& rep) { return evaluate(w.letters(), rep); }

long double max_entry_distance(const Mat2& x, const Mat2& y) {
  long double d = 0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(x.e[i] - y.e[i]));
  return d;
}

long double distance_from_pm_identity(const Mat2& m) {
  long double scale = 1;
  for (const Complex& z : m.e) scale = std::max(scale, std::abs(z));
  Mat2 minus_id = {{Complex(-1), Complex(0), Complex(0), Complex(-1)}};
  return std::min(max_entry_distance(m, Mat2::identity()), max_entry_distance(m, minus_id)) / scale;
}

std::vector<Complex> poly_roots(const Poly& p) {
  if (p.degree() < 1) return {};
  Poly sq = p;
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() >= 1) sq = exact_quotient_primitive(p, g);

  const int n = sq.degree();
  const auto& c = sq.coeffs();
  const long double lead = c.back().convert_to<long double>();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) {
    companion(i, n - 1) = static_cast<double>(-c[static_cast<std::size_t>(i)].convert_to<long double>() / lead);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw InvariantError("companion eigenvalue solve failed");

  const Poly dsq = sq.derivative();
  std::vector<Complex> roots;
  for (int i = 0; i < n; ++i) {
    Complex z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int iter = 0; iter < 60; ++iter) {
      Complex fz = sq.eval(z);
      Complex dz = dsq.eval(z);
      if (std::abs(dz) == 0) break;
      Complex step = fz / dz;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::max<long double>(1, std::abs(z))) break;
    }
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return roots;
}

std::vector<NumericRep> numeric_reps(const Fraction& f, long double tol, std::vector<std::string>* warnings) {
  RileyData data = riley_polynomials(f);
  Relator rel = relator(f);
  std::vector<NumericRep> reps;
  for (const Complex& z : poly_roots(data.gcd)) {
    NumericRep rep = make_rep(z);
    rep.residual = max_entry_distance(evaluate(rel.u.representative().word(), rep), Mat2::identity());
    if (rep.residual > tol) {
      if (warnings) {
        warnings->push_back("root (" + std::to_string(static_cast<double>(z.real())) + ", " +
                            std::to_string(static_cast<double>(z.imag())) + ") dropped: residual " +
                            std::to_string(static_cast<double>(rep.residual)));
      }
      continue;
    }
    reps.push_back(rep);
  }
  if (reps.empty() && warnings) warnings->push_back("no representation root below tolerance");
  return reps;
}

}  // namespace bridge
