#include "bridge/farey.hpp"

#include <map>

#include "bridge/errors.hpp"

namespace bridge {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// (numerator, denominator) with infinity as (1, 0).
std::pair<BigInt, BigInt> coords(const ExtRational& x) { return {x.num(), x.den()}; }

BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

}  // namespace

bool is_farey_edge(const ExtRational& s, const ExtRational& t) {
  auto [q1, p1] = coords(s);
  auto [q2, p2] = coords(t);
  return abs_big(q1 * p2 - q2 * p1) == 1;
}

FareyEdge::FareyEdge(ExtRational s, ExtRational t) : s_(std::move(s)), t_(std::move(t)) {
  if (!is_farey_edge(s_, t_)) throw DomainError(s_.to_string() + " and " + t_.to_string() + " are not Farey neighbours");
}

std::string FareyEdge::to_string() const { return "(" + s_.to_string() + ", " + t_.to_string() + ")"; }

Reflection::Reflection(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det() != -1) throw DomainError("reflection matrix must have determinant -1");
  // Projective matrices: fix the sign so the first nonzero entry is positive.
  const BigInt& lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
  if (lead < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

ExtRational Reflection::apply(const ExtRational& x) const {
  auto [q, p] = coords(x);
  return Fraction(a_ * q + b_ * p, c_ * q + d_ * p);
}

std::string Reflection::to_string() const {
  return "[" + a_.str() + "," + b_.str() + ";" + c_.str() + "," + d_.str() + "]";
}

Reflection reflection_in_edge(const FareyEdge& e) {
  auto [q1, p1] = coords(e.first());
  auto [q2, p2] = coords(e.second());
  const BigInt s = q1 * p2 + q2 * p1;
  return Reflection(s, -2 * q1 * q2, 2 * p1 * p2, -s);
}

ExtRational farey_neighbor(const ExtRational& r) {
  if (r.is_infinite()) return Fraction(0);
  const BigInt& q = r.num();
  const BigInt& p = r.den();
  if (p == 1) return ExtRational::infinity();
  // q p0 = 1 (mod p), q0 = (q p0 - 1) / p.
  BigInt p0 = mod_inverse(q, p);
  BigInt q0 = (q * p0 - 1) / p;
  return Fraction(q0, p0);
}

std::vector<Generator> gamma_generators(const ExtRational& r, int neighbor_bound) {
  if (r.is_infinite()) throw DomainError("gamma_generators needs a finite slope");
  if (neighbor_bound < 0) throw DomainError("neighbor bound must be non-negative");
  std::vector<Generator> gens;
  auto add = [&gens](const ExtRational& s, const ExtRational& t) {
    FareyEdge e(s, t);
    Reflection refl = reflection_in_edge(e);
    for (const Generator& g : gens) {
      if (g.reflection == refl) return;
    }
    gens.push_back({e, refl});
  };
  for (int k = -neighbor_bound; k <= neighbor_bound; ++k) add(ExtRational::infinity(), Fraction(k));
  const ExtRational nb = farey_neighbor(r);
  auto [q0, p0] = coords(nb);
  for (int j = -neighbor_bound; j <= neighbor_bound; ++j) add(r, Fraction(q0 + j * r.num(), p0 + j * r.den()));
  return gens;
}

std::string to_string(Verdict v) { return v == Verdict::yes ? "yes" : "unknown"; }

OrbitResult orbit_contains(const ExtRational& r, const ExtRational& target, int depth, int neighbor_bound,
                           std::int64_t denominator_cap) {
  if (depth < 0) throw DomainError("depth must be non-negative");
  const std::vector<Generator> gens = gamma_generators(r, neighbor_bound);

  struct Node {
    ExtRational value;
    std::size_t parent;
    std::size_t generator;
    int depth;
  };
  std::vector<Node> nodes;
  std::map<ExtRational, std::size_t> seen;
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

  OrbitResult res;
  auto finish = [&](std::size_t idx) {
    res.verdict = Verdict::yes;
    res.depth = nodes[idx].depth;
    std::vector<std::size_t> path;
    while (nodes[idx].parent != kRoot) {
      path.push_back(nodes[idx].generator);
      idx = nodes[idx].parent;
    }
    res.start = nodes[idx].value;
    res.path.assign(path.rbegin(), path.rend());
    res.visited = nodes.size();
    return res;
  };

  for (const ExtRational& s : {r, ExtRational::infinity()}) {
    if (seen.count(s)) continue;
    seen.emplace(s, nodes.size());
    nodes.push_back({s, kRoot, 0, 0});
    if (s == target) return finish(nodes.size() - 1);
  }
  std::size_t frontier_begin = 0;
  for (int level = 1; level <= depth; ++level) {
    const std::size_t frontier_end = nodes.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        ExtRational img = gens[g].reflection.apply(nodes[i].value);
        if (!img.is_infinite() && img.den() > denominator_cap) {
          ++res.cap_hits;
          continue;
        }
        if (seen.count(img)) continue;
        seen.emplace(img, nodes.size());
        nodes.push_back({img, i, g, level});
        if (img == target) return finish(nodes.size() - 1);
      }
    }
    frontier_begin = frontier_end;
  }
  res.visited = nodes.size();
  return res;
}

EpimorphismResult epimorphism_exists(const Fraction& r_tilde, const Fraction& r, int depth, int neighbor_bound,
                                     std::int64_t denominator_cap) {
  auto knot = genus_one_params(r);
  if (!knot) throw DomainError(r.to_string() + " is not a genus-one 2-bridge slope 2n/(4mn+-1)");
  if (knot->m() == 1 && knot->n() == 1 && !knot->plus()) {
    throw DomainError("K(2/3) is the trefoil, which is not hyperbolic");
  }
  std::vector<ExtRational> targets;
  if (r_tilde.is_infinite()) {
    targets.push_back(r_tilde);
  } else {
    Fraction reduced = r_tilde - Fraction(floor_div(r_tilde.num(), r_tilde.den()));
    targets = {reduced, reduced + Fraction(1)};
  }
  EpimorphismResult res;
  for (const Fraction& base : {r, r_prime(r)}) {
    for (const ExtRational& t : targets) {
      OrbitResult o = orbit_contains(base, t, depth, neighbor_bound, denominator_cap);
      res.cap_hits += o.cap_hits;
      if (o.verdict == Verdict::yes) {
        res.verdict = Verdict::yes;
        res.base = base;
        res.tested_target = t;
        res.orbit = std::move(o);
        res.generators = gamma_generators(base, neighbor_bound);
        return res;
      }
    }
  }
  res.base = r;
  res.tested_target = targets.front();
  return res;
}

}  // namespace bridge
