#pragma once

// Farey tessellation reflections and a bounded orbit search for the groups
// generated by reflections in Farey edges incident to infinity or r.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bridge/slope.hpp"

namespace bridge {

using ExtRational = Fraction;

bool is_farey_edge(const ExtRational& s, const ExtRational& t);

class FareyEdge {
 public:
  /// Throws DomainError unless s, t are Farey neighbours.
  FareyEdge(ExtRational s, ExtRational t);

  const ExtRational& first() const { return s_; }
  const ExtRational& second() const { return t_; }
  std::string to_string() const;

 private:
  ExtRational s_;
  ExtRational t_;
};

/// x -> (a x + b) / (c x + d) with ad - bc = -1, normalized up to sign.
class Reflection {
 public:
  Reflection(BigInt a, BigInt b, BigInt c, BigInt d);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }
  BigInt det() const { return a_ * d_ - b_ * c_; }

  ExtRational apply(const ExtRational& x) const;
  std::string to_string() const;

  friend bool operator==(const Reflection&, const Reflection&) = default;

 private:
  BigInt a_, b_, c_, d_;
};

Reflection reflection_in_edge(const FareyEdge& e);

/// A fixed Farey neighbour q0/p0 of r = q/p: |q p0 - p q0| = 1.
ExtRational farey_neighbor(const ExtRational& r);

struct Generator {
  FareyEdge edge;
  Reflection reflection;
};

/// Reflections in (inf, k) for |k| <= bound and in (r, s_j) for |j| <= bound,
/// s_j = (q0 + j q)/(p0 + j p). Duplicates are removed.
std::vector<Generator> gamma_generators(const ExtRational& r, int neighbor_bound);

enum class Verdict { yes, unknown };
std::string to_string(Verdict v);

struct OrbitResult {
  Verdict verdict = Verdict::unknown;
  ExtRational start;                      // r or infinity
  std::vector<std::size_t> path;          // generator indices, applied in order
  int depth = 0;
  std::size_t visited = 0;
  std::size_t cap_hits = 0;
};

inline constexpr std::int64_t kDefaultDenominatorCap = 1'000'000;

/// Breadth-first closure of {r, inf} under gamma_generators(r, bound), up to
/// `depth` generator applications. `unknown` is never a proof of absence.
OrbitResult orbit_contains(const ExtRational& r, const ExtRational& target, int depth, int neighbor_bound,
                           std::int64_t denominator_cap = kDefaultDenominatorCap);

struct EpimorphismResult {
  Verdict verdict = Verdict::unknown;
  ExtRational base;           // r or r'
  ExtRational tested_target;  // r~ (mod 1) or r~ + 1
  OrbitResult orbit;
  std::vector<Generator> generators;
  std::size_t cap_hits = 0;
};

/// Semi-decision for an epimorphism G(K(r~)) -> G(K(r)) with K(r) a
/// hyperbolic genus-one 2-bridge knot.
EpimorphismResult epimorphism_exists(const Fraction& r_tilde, const Fraction& r, int depth, int neighbor_bound,
                                     std::int64_t denominator_cap = kDefaultDenominatorCap);

}  // namespace bridge
