#include "bridge/presentation.hpp"

#include <numeric>

#include "bridge/errors.hpp"

namespace bridge {

void append_copies(std::vector<int>& out, std::int64_t k, int x) {
  for (std::int64_t i = 0; i < k; ++i) out.push_back(x);
}

CyclicSSequence CanonicalDecomposition::cyclic() const {
  std::vector<int> runs;
  for (int rep = 0; rep < 2; ++rep) {
    runs.insert(runs.end(), s1.runs.begin(), s1.runs.end());
    runs.insert(runs.end(), s2.runs.begin(), s2.runs.end());
  }
  return {runs};
}

std::vector<int> epsilon_sequence(std::int64_t p, std::int64_t q) {
  if (p < 2 || q <= 0 || q >= p) throw DomainError("epsilon_sequence needs 0 < q < p");
  if (std::gcd(p, q) != 1) throw DomainError("epsilon_sequence needs gcd(p, q) = 1");
  std::vector<int> eps;
  eps.reserve(static_cast<std::size_t>(p - 1));
  for (std::int64_t i = 1; i < p; ++i) {
    // i*q < p*q fits comfortably for the slopes this library handles.
    eps.push_back(((i * q) / p) % 2 == 0 ? 1 : -1);
  }
  return eps;
}

Relator relator(std::int64_t p, std::int64_t q) {
  if (p > (std::int64_t{1} << 24)) throw DomainError("relator: p too large");
  std::vector<int> eps = epsilon_sequence(p, q);
  std::vector<Letter> hat;
  hat.reserve(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    // Odd indices (1-based) carry b, even indices carry a.
    Gen g = (i % 2 == 0) ? Gen::B : Gen::A;
    hat.push_back({g, static_cast<std::int8_t>(eps[i])});
  }
  Word u_hat(std::move(hat));
  Word u = Word{letters::a} + u_hat + Word{letters::b} + u_hat.inverse();
  if (!is_cyclically_reduced(u) || u.size() != static_cast<std::size_t>(2 * p)) {
    throw InvariantError("relator for " + std::to_string(q) + "/" + std::to_string(p) +
                         " is not cyclically reduced of length 2p");
  }
  return Relator{Fraction(q, p), std::move(eps), ReducedWord::checked(std::move(u_hat)),
                 CyclicWord(ReducedWord::checked(std::move(u)))};
}

Relator relator(const Fraction& f) {
  if (f.is_infinite()) throw DomainError("relator: slope must be finite");
  return relator(to_int64(f.den()), to_int64(f.num()));
}

CanonicalDecomposition canonical_decomposition(const GenusOneKnot& k) {
  const int m2 = static_cast<int>(2 * k.m());
  std::vector<int> blocks;
  append_copies(blocks, 2 * k.n() - 1, m2);
  if (k.plus()) return {SSequence{{m2 + 1}}, SSequence{blocks}};
  return {SSequence{blocks}, SSequence{{m2 - 1}}};
}

bool verify_cs_closed_form(const GenusOneKnot& k) {
  Relator rel = relator(genus_one_fraction(k));
  return cyclic_s_sequence(rel.u) == canonical_decomposition(k).cyclic();
}

}  // namespace bridge
