#pragma once

// Word combinatorics behind the freeness of <x_l, y_l>: the relation word w,
// its alternating shadow w', closed forms for CS(w'), and a numeric scan for
// short relations under parabolic representations.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bridge/check.hpp"
#include "bridge/slope.hpp"
#include "bridge/words.hpp"

namespace bridge {

/// x_l^{k_1} y_l^{l_1} ... x_l^{k_t} y_l^{l_t}, all exponents nonzero.
struct ExponentPattern {
  std::vector<std::pair<int, int>> pairs;
};

/// Signs (eps_{i,x}, eps_{i,y}) of the exponents.
struct SignPattern {
  std::vector<std::pair<int, int>> signs;

  std::string to_string() const;
};

/// All 4^t sign patterns of length t.
std::vector<SignPattern> all_sign_patterns(int t);

/// w_x a^{k_1} w_x^-1 w_y b^{-l_1} w_y^-1 ..., required to be cyclically
/// reduced as written; throws InvariantError otherwise.
CyclicWord build_w(const GenusOneKnot& k, const ExponentPattern& e);

/// The cyclic word of x_l^{e_1x} y_l^{e_1y} ...; throws InvariantError if it
/// is not cyclically alternating.
CyclicWord build_w_prime(const GenusOneKnot& k, const SignPattern& s);

/// Block orientations of the closed form: eps_j for each of the 2t factors.
std::vector<int> closed_form_orientations(const GenusOneKnot& k, const SignPattern& s);

/// Closed form of CS(w'). Throws Unsupported for (m, n, sign) = (1, 1, -).
CyclicSSequence cs_w_prime_closed_form(const GenusOneKnot& k, const SignPattern& s);

/// CS(w') assembled factor by factor from the tabulated S(x_l^eps) with
/// boundary runs merged. Valid in every case, including (1, 1, -).
CyclicSSequence cs_w_prime_from_tables(const GenusOneKnot& k, const SignPattern& s);

struct CsWPrimeReport {
  CyclicSSequence computed;
  bool closed_form_supported = true;
  bool closed_form_matches = true;
  bool forbidden_terms_ok = true;
  std::string detail;

  bool ok() const { return closed_form_matches && forbidden_terms_ok; }
};

/// The case-specific property CS(w') must have: returns the offending term if any.
std::optional<int> forbidden_term(const GenusOneKnot& k, const CyclicSSequence& cs);
std::string forbidden_rule(const GenusOneKnot& k);

CsWPrimeReport verify_claim2(const GenusOneKnot& k, const SignPattern& s);

struct RelationHit {
  std::string word;  // over x, X, y, Y
  std::size_t root = 0;
  double distance = 0;
};

struct ScanReport {
  std::size_t roots = 0;
  std::size_t words_checked = 0;
  double max_relator_residual = 0;
  double min_distance = 0;  // over all words and roots
  std::string closest_word;
  std::vector<RelationHit> hits;
  std::vector<std::string> warnings;
};

/// Evaluates every freely reduced word of length 1..max_letters in
/// x_l^{+-1}, y_l^{+-1} at each representation root; words within `tol` of
/// +-I are reported as hits.
ScanReport no_relation_scan(const GenusOneKnot& k, int max_letters, double tol);

}  // namespace bridge
