#include "bridge/orbifold.hpp"

#include <numeric>

#include "bridge/errors.hpp"

namespace bridge {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

}  // namespace

DihedralElement::DihedralElement(std::int64_t p, std::int64_t rotation, bool flip)
    : p_(p), rot_(0), flip_(flip) {
  if (p < 1) throw DomainError("dihedral modulus must be positive");
  rot_ = mod(rotation, p);
}

DihedralElement operator*(const DihedralElement& x, const DihedralElement& y) {
  if (x.p_ != y.p_) throw DomainError("dihedral elements of different groups");
  const std::int64_t r = x.flip_ ? x.rot_ - y.rot_ : x.rot_ + y.rot_;
  return {x.p_, r, x.flip_ != y.flip_};
}

DihedralElement DihedralElement::inverse() const {
  if (flip_) return *this;
  return {p_, -rot_, false};
}

std::int64_t DihedralElement::order() const {
  if (flip_) return 2;
  return p_ / std::gcd(p_, rot_);
}

std::int64_t HomologyClass::order() const { return p / std::gcd(p, value); }

std::int64_t homology_order(const Fraction& f) {
  if (f.is_infinite() || f.den() < 1) throw DomainError("homology_order needs a finite slope");
  return to_int64(f.den());
}

HomologyClass arc_class(const Fraction& s, std::int64_t p) {
  if (p < 1) throw DomainError("arc_class needs p >= 1");
  // infinity = 1/0 has denominator 0, i.e. the trivial class.
  const std::int64_t v = to_int64(s.den());
  return {mod(v, p), p};
}

SubgroupVerdict subgroup_verdict(const Fraction& s, const Fraction& r) {
  const std::int64_t p = homology_order(r);
  HomologyClass c = arc_class(s, p);
  SubgroupVerdict v{s, r, c.order(), 0, false};
  v.dihedral_image_order = 2 * v.order_in_homology;
  v.proper = v.order_in_homology < p;
  return v;
}

FamilyVerdict theorem2_case(std::int64_t m) {
  if (m < 2) throw DomainError("the [2m,-2m] family needs m >= 2");
  Fraction r(2 * m, 4 * m * m - 1);
  return {m, subgroup_verdict(Fraction(1, 2 * m - 1), r), subgroup_verdict(Fraction(1, 2 * m + 1), r)};
}

bool theorem2_sweep(std::int64_t m_max) {
  if (m_max < 2) throw DomainError("theorem2_sweep needs m_max >= 2");
  for (std::int64_t m = 2; m <= m_max; ++m) {
    FamilyVerdict v = theorem2_case(m);
    if (!v.first.proper || v.first.order_in_homology != 2 * m + 1) return false;
    if (!v.second.proper || v.second.order_in_homology != 2 * m - 1) return false;
  }
  return true;
}

std::vector<SubgroupVerdict> remark_verdicts(const Fraction& r, const std::vector<Fraction>& slopes) {
  const std::int64_t p = homology_order(r);
  const std::int64_t q = to_int64(r.num());
  if (mod(q * q, p) != mod(1, p)) throw DomainError("slope " + r.to_string() + " does not satisfy q^2 = 1 mod p");
  std::vector<SubgroupVerdict> out;
  for (const Fraction& s : slopes) out.push_back(subgroup_verdict(s, r));
  return out;
}

}  // namespace bridge
