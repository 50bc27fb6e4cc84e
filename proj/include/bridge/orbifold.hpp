#pragma once

// Arithmetic of the pi-orbifold quotient of a 2-bridge knot group.
//
// The topological inputs (H_1 of the double branched cover is Z/p, the
// class of the lift of a slope-u/v loop is v times the generator, the
// orbifold group is Z/p x| Z/2) are taken as given; this module only does
// the resulting modular arithmetic.

#include <cstdint>
#include <string>
#include <vector>

#include "bridge/slope.hpp"

namespace bridge {

/// Element of the dihedral group of order 2p: rotation r, optional flip.
class DihedralElement {
 public:
  DihedralElement(std::int64_t p, std::int64_t rotation, bool flip);

  std::int64_t modulus() const { return p_; }
  std::int64_t rotation() const { return rot_; }
  bool flip() const { return flip_; }

  static DihedralElement identity(std::int64_t p) { return {p, 0, false}; }
  DihedralElement inverse() const;
  std::int64_t order() const;

  friend DihedralElement operator*(const DihedralElement& x, const DihedralElement& y);
  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;

 private:
  std::int64_t p_;
  std::int64_t rot_;
  bool flip_;
};

struct HomologyClass {
  std::int64_t value = 0;  // mod p
  std::int64_t p = 1;

  /// Order of the class in Z/p.
  std::int64_t order() const;
};

std::int64_t homology_order(const Fraction& f);

/// Class of the slope-s arc lift: its denominator mod p.
HomologyClass arc_class(const Fraction& s, std::int64_t p);

struct SubgroupVerdict {
  Fraction slope;
  Fraction knot;
  std::int64_t order_in_homology = 0;
  std::int64_t dihedral_image_order = 0;
  bool proper = false;
};

SubgroupVerdict subgroup_verdict(const Fraction& s, const Fraction& r);

/// r = 2m/(4m^2 - 1) with s1 = 1/(2m-1), s2 = 1/(2m+1).
struct FamilyVerdict {
  std::int64_t m = 0;
  SubgroupVerdict first;
  SubgroupVerdict second;
};

FamilyVerdict theorem2_case(std::int64_t m);
/// Every m in 2..m_max gives proper images of orders 2m+1 and 2m-1.
bool theorem2_sweep(std::int64_t m_max);

/// Verdicts for caller-supplied arc slopes of a q^2 = 1 (mod p) knot. No
/// formula for the slopes is provided.
std::vector<SubgroupVerdict> remark_verdicts(const Fraction& r, const std::vector<Fraction>& slopes);

}  // namespace bridge
