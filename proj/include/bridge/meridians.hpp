#pragma once

// Wirtinger-derived words c_i, d_0, d_1 and the long upper meridian pair
// (x_l, y_l) of a genus-one 2-bridge knot, built two independent ways:
// by reducing the raw conjugation formula and from closed alternating forms.

#include <cstdint>
#include <utility>

#include "bridge/check.hpp"
#include "bridge/slope.hpp"
#include "bridge/words.hpp"

namespace bridge {

struct MeridianWords {
  ReducedWord d0;
  ReducedWord d1;
  ReducedWord w_x;
  ReducedWord w_y;
  ReducedWord x_l;  // w_x a w_x^-1
  ReducedWord y_l;  // w_y b^-1 w_y^-1
};

/// Wirtinger generator c_i, -m <= i <= m+1, as a word in a, b.
ReducedWord c_word(std::int64_t i, std::int64_t m);

std::pair<ReducedWord, ReducedWord> d0_d1(const GenusOneKnot& k);

/// Unreduced <d1 d0^-1>^n b^-1 <d1 d0^-1>^-n (m even) or the
/// <d1^-1 d0> variant (m odd).
Word y_l_raw(const GenusOneKnot& k);

/// (-1)^n
int meridian_epsilon(const GenusOneKnot& k);

/// Tabulated S(w_x) = S(w_y).
SSequence expected_w_sequence(const GenusOneKnot& k);
/// Tabulated S(x_l^eps) = S(y_l^eps), eps = (-1)^n.
SSequence expected_meridian_sequence(const GenusOneKnot& k);

/// Builds w_x, w_y with alt_word from the tabulated initial letters and
/// S-sequences, then x_l, y_l by conjugation. Throws InvariantError if the
/// result contradicts the tables.
MeridianWords closed_form(const GenusOneKnot& k);

/// x_l^k as the explicit word w_x a^k w_x^-1 (no reduction).
Word x_power_word(const MeridianWords& mw, int k);
/// y_l^k as the explicit word w_y b^-k w_y^-1 (no reduction).
Word y_power_word(const MeridianWords& mw, int k);

/// Cross-checks the closed forms against raw reduction, the f-symmetry and
/// the power identities for 1 <= |k| <= k_max.
CheckOutcome verify_meridian_forms(const GenusOneKnot& k, int k_max = 4);

/// The tabulated terminal letters b^eps (minus) and b^-eps (plus) of w_x, and
/// the matching ones of w_y. For m = 1, minus, n >= 2 these disagree with the
/// tabulated S-sequence.
CheckOutcome check_stated_w_terminals(const GenusOneKnot& k);

}  // namespace bridge
