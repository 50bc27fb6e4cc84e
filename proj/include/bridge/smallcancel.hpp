#pragma once

// Pieces and the C(p) / T(4) small cancellation conditions for the
// symmetrized closure of a single cyclic relator.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bridge/check.hpp"
#include "bridge/slope.hpp"
#include "bridge/words.hpp"

namespace bridge {

/// All cyclic permutations of a relator and of its inverse.
///
/// Elements are kept as sorted letter-code strings so that "how many
/// elements start with v" is two binary searches.
class SymmetrizedSet {
 public:
  explicit SymmetrizedSet(const CyclicWord& u);

  std::size_t size() const { return keys_.size(); }
  std::size_t relator_length() const { return relator_length_; }
  const std::vector<ReducedWord>& elements() const { return elements_; }

  /// Number of distinct elements having `v` as a prefix.
  std::size_t prefix_count(std::span<const Letter> v) const;
  /// Length of the longest prefix of `v` that is a piece.
  std::size_t longest_piece_prefix(std::span<const Letter> v) const;
  /// Index of the element equal to the inverse of element `i`.
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }

 private:
  std::size_t relator_length_ = 0;
  std::vector<std::string> keys_;
  std::vector<ReducedWord> elements_;
  std::vector<std::size_t> inverse_;
};

SymmetrizedSet symmetrized_set(const CyclicWord& u);

/// v is a common prefix of two distinct elements.
bool is_piece(const ReducedWord& v, const SymmetrizedSet& r);
bool is_piece(std::span<const Letter> v, const SymmetrizedSet& r);

/// v is a subword of some element.
bool is_relator_subword(std::span<const Letter> v, const SymmetrizedSet& r);

/// Minimal t with v = p_1 ... p_t, each p_i a piece; nullopt when no such
/// decomposition exists. Throws DomainError if v is empty or not a subword
/// of an element.
std::optional<int> min_pieces(const ReducedWord& v, const SymmetrizedSet& r);
std::optional<int> min_pieces(std::span<const Letter> v, const SymmetrizedSet& r);

/// Minimal piece count of a word whose piece reach at each offset is known:
/// from offset i any prefix of length <= reach[i] is a piece.
std::optional<int> min_pieces_from_reach(std::span<const std::size_t> reach);

struct PieceReport {
  ReducedWord word;
  bool is_piece = false;
  std::optional<int> min_pieces;
};

PieceReport piece_report(const ReducedWord& v, const SymmetrizedSet& r);

/// No element of R is a product of fewer than p pieces.
bool check_C(const SymmetrizedSet& r, int p);
/// No triple r1, r2, r3 with r_{i+1} != r_i^-1 (cyclically) such that
/// r1 r2, r2 r3 and r3 r1 all admit cancellation. Only q = 4 is supported.
bool check_T(const SymmetrizedSet& r, int q = 4);

/// The piece patterns listed for genus-one relators: S-shapes that are
/// asserted to be pieces whenever they occur in (u_r^{+-1}).
bool listed_piece_pattern(const GenusOneKnot& k, const SSequence& s);

/// Counts starting offsets at which `pattern` matches consecutively in the
/// cyclic sequence `cs`, with wraparound.
int cyclic_occurrences(std::span<const int> cs, std::span<const int> pattern);

/// S(v) contains the S-shape of some subword v' with S(v') = (S1, S2, l) or
/// (l, S2, S1), l >= 1.
bool contains_three_piece_shape(const SSequence& sv, const SSequence& s1, const SSequence& s2);

CheckOutcome verify_piece_prop(const GenusOneKnot& k);
CheckOutcome verify_three_piece_property(const GenusOneKnot& k);

}  // namespace bridge
