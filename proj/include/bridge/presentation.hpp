#pragma once

// One-relator presentation <a, b | u_r> of a 2-bridge knot group and the
// canonical decomposition of its cyclic S-sequence.

#include <cstdint>
#include <vector>

#include "bridge/slope.hpp"
#include "bridge/words.hpp"

namespace bridge {

struct Relator {
  Fraction fraction;
  std::vector<int> epsilons;  // epsilon_1 .. epsilon_{p-1}
  ReducedWord u_hat;
  CyclicWord u;
};

struct CanonicalDecomposition {
  SSequence s1;
  SSequence s2;

  /// ((S1, S2, S1, S2))
  CyclicSSequence cyclic() const;
};

/// epsilon_i = (-1)^floor(iq/p) for i = 1..p-1.
std::vector<int> epsilon_sequence(std::int64_t p, std::int64_t q);

/// u = a u_hat b u_hat^-1 with u_hat = b^e1 a^e2 ... b^e_{p-2} a^e_{p-1}.
Relator relator(const Fraction& f);
Relator relator(std::int64_t p, std::int64_t q);

CanonicalDecomposition canonical_decomposition(const GenusOneKnot& k);

/// CS(u_r) equals ((S1, S2, S1, S2)) up to rotation.
bool verify_cs_closed_form(const GenusOneKnot& k);

/// k copies of x, appended to `out`.
void append_copies(std::vector<int>& out, std::int64_t k, int x);

}  // namespace bridge
