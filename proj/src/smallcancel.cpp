#include "bridge/smallcancel.hpp"

#include <algorithm>
#include <array>

#include "bridge/errors.hpp"
#include "bridge/presentation.hpp"

namespace bridge {

namespace {

std::string encode(std::span<const Letter> v) {
  std::string key(v.size(), '\0');
  for (std::size_t i = 0; i < v.size(); ++i) key[i] = static_cast<char>(v[i].code());
  return key;
}

Letter decode(char c) {
  const int code = static_cast<unsigned char>(c);
  return {code / 2 == 0 ? Gen::A : Gen::B, static_cast<std::int8_t>(code % 2 == 0 ? 1 : -1)};
}

}  // namespace

SymmetrizedSet::SymmetrizedSet(const CyclicWord& u) : relator_length_(u.size()) {
  if (u.empty()) throw DomainError("symmetrized set of the empty word");
  for (const CyclicWord& w : {u, u.inverse()}) {
    for (std::size_t i = 0; i < w.size(); ++i) keys_.push_back(encode(w.rotation(i).letters()));
  }
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());

  elements_.reserve(keys_.size());
  inverse_.resize(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    std::vector<Letter> letters;
    letters.reserve(keys_[i].size());
    for (char c : keys_[i]) letters.push_back(decode(c));
    elements_.push_back(ReducedWord::checked(Word(std::move(letters))));
  }
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    std::string inv = encode(elements_[i].inverse().letters());
    auto it = std::lower_bound(keys_.begin(), keys_.end(), inv);
    if (it == keys_.end() || *it != inv) throw InvariantError("symmetrized set not closed under inversion");
    inverse_[i] = static_cast<std::size_t>(it - keys_.begin());
  }
}

std::size_t SymmetrizedSet::prefix_count(std::span<const Letter> v) const {
  if (v.size() > relator_length_) return 0;
  std::string key = encode(v);
  auto lo = std::lower_bound(keys_.begin(), keys_.end(), key);
  key.push_back('\x04');  // sorts after every letter code
  auto hi = std::lower_bound(lo, keys_.end(), key);
  return static_cast<std::size_t>(hi - lo);
}

std::size_t SymmetrizedSet::longest_piece_prefix(std::span<const Letter> v) const {
  auto lo = keys_.begin();
  auto hi = keys_.end();
  std::size_t len = 0;
  const std::size_t limit = std::min(v.size(), relator_length_);
  while (len < limit) {
    const char c = static_cast<char>(v[len].code());
    // All keys in [lo, hi) share the first `len` characters.
    auto next_lo = std::lower_bound(lo, hi, c, [len](const std::string& k, char x) { return k[len] < x; });
    auto next_hi = std::upper_bound(next_lo, hi, c, [len](char x, const std::string& k) { return x < k[len]; });
    if (next_hi - next_lo < 2) break;
    lo = next_lo;
    hi = next_hi;
    ++len;
  }
  return len;
}

SymmetrizedSet symmetrized_set(const CyclicWord& u) { return SymmetrizedSet(u); }

bool is_piece(std::span<const Letter> v, const SymmetrizedSet& r) {
  if (v.empty()) throw DomainError("is_piece: empty word");
  return r.prefix_count(v) >= 2;
}

bool is_piece(const ReducedWord& v, const SymmetrizedSet& r) { return is_piece(v.letters(), r); }

bool is_relator_subword(std::span<const Letter> v, const SymmetrizedSet& r) {
  // R is closed under rotation, so every subword of an element is a prefix of one.
  return r.prefix_count(v) >= 1;
}

std::optional<int> min_pieces_from_reach(std::span<const std::size_t> reach) {
  // Breadth-first layers over cut points 0..n; from cut i the piece edges
  // reach cuts i+1 .. i+reach[i].
  const std::size_t n = reach.size();
  if (n == 0) return 0;
  std::size_t layer_end = 0;
  std::size_t furthest = 0;
  int layers = 0;
  for (std::size_t i = 0; i < n; ++i) {
    furthest = std::max(furthest, i + reach[i]);
    if (i == layer_end) {
      if (furthest <= i) return std::nullopt;
      ++layers;
      layer_end = furthest;
      if (layer_end >= n) return layers;
    }
  }
  return std::nullopt;
}

std::optional<int> min_pieces(std::span<const Letter> v, const SymmetrizedSet& r) {
  if (v.empty()) throw DomainError("min_pieces: empty word");
  if (!is_relator_subword(v, r)) throw DomainError("min_pieces: word is not a subword of any relator");
  std::vector<std::size_t> reach(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) reach[i] = r.longest_piece_prefix(v.subspan(i));
  return min_pieces_from_reach(reach);
}

std::optional<int> min_pieces(const ReducedWord& v, const SymmetrizedSet& r) { return min_pieces(v.letters(), r); }

PieceReport piece_report(const ReducedWord& v, const SymmetrizedSet& r) {
  PieceReport rep{v, is_piece(v, r), std::nullopt};
  if (is_relator_subword(v.letters(), r)) rep.min_pieces = min_pieces(v, r);
  return rep;
}

bool check_C(const SymmetrizedSet& r, int p) {
  for (const ReducedWord& e : r.elements()) {
    auto t = min_pieces(e, r);
    if (t && *t < p) return false;
  }
  return true;
}

bool check_T(const SymmetrizedSet& r, int q) {
  if (q != 4) throw Unsupported("only T(4) is implemented");
  // Bucket elements by (first letter, last letter).
  std::array<std::array<std::vector<std::size_t>, 4>, 4> bucket;
  const auto& el = r.elements();
  for (std::size_t i = 0; i < el.size(); ++i) bucket[el[i].front().code()][el[i].back().code()].push_back(i);

  for (std::size_t r1 = 0; r1 < el.size(); ++r1) {
    const std::uint8_t need2 = el[r1].back().inverse().code();
    const std::uint8_t close = el[r1].front().inverse().code();
    for (int last2 = 0; last2 < 4; ++last2) {
      for (std::size_t r2 : bucket[need2][last2]) {
        if (r2 == r.inverse_index(r1)) continue;
        const std::uint8_t need3 = Letter{last2 / 2 == 0 ? Gen::A : Gen::B,
                                          static_cast<std::int8_t>(last2 % 2 == 0 ? 1 : -1)}
                                       .inverse()
                                       .code();
        for (std::size_t r3 : bucket[need3][close]) {
          if (r3 == r.inverse_index(r2) || r1 == r.inverse_index(r3)) continue;
          return false;
        }
      }
    }
  }
  return true;
}

bool listed_piece_pattern(const GenusOneKnot& k, const SSequence& s) {
  const auto& v = s.runs;
  const int m = static_cast<int>(k.m());
  const std::int64_t n = k.n();
  auto one_and_small = [&] {
    return v.size() == 2 && ((v[0] == 1 && v[1] >= 1 && v[1] <= m) || (v[1] == 1 && v[0] >= 1 && v[0] <= m));
  };
  if (k.plus()) return one_and_small();

  if (v.size() == 1 && v[0] >= 1 && v[0] <= 2 * m) return true;
  if (one_and_small()) return true;
  auto all_2m = [&](std::size_t from, std::size_t to) {
    return std::all_of(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to),
                       [m](int x) { return x == 2 * m; });
  };
  const auto len = static_cast<std::int64_t>(v.size());
  // (k<2m>, 1), 0 <= k <= 2n-2
  if (v.back() == 1 && all_2m(0, v.size() - 1) && len - 1 <= 2 * n - 2) return true;
  // (1, k<2m>), 0 <= k <= 2n-2
  if (v.front() == 1 && all_2m(1, v.size()) && len - 1 <= 2 * n - 2) return true;
  // (1, k<2m>, 1), 0 <= k <= 2n-3
  if (v.size() >= 2 && v.front() == 1 && v.back() == 1 && all_2m(1, v.size() - 1) && len - 2 <= 2 * n - 3) {
    return true;
  }
  return false;
}

int cyclic_occurrences(std::span<const int> cs, std::span<const int> pattern) {
  if (pattern.empty() || pattern.size() > cs.size()) return 0;
  int count = 0;
  for (std::size_t start = 0; start < cs.size(); ++start) {
    bool match = true;
    for (std::size_t k = 0; k < pattern.size() && match; ++k) match = cs[(start + k) % cs.size()] == pattern[k];
    if (match) ++count;
  }
  return count;
}

bool contains_three_piece_shape(const SSequence& sv, const SSequence& s1, const SSequence& s2) {
  const auto& s = sv.runs;
  // Forward shape (S1, S2, l): the first block may be a tail of a longer run,
  // every following block is exact, and at least one more run must follow.
  std::vector<int> fwd = s1.runs;
  fwd.insert(fwd.end(), s2.runs.begin(), s2.runs.end());
  const std::size_t w = fwd.size();
  for (std::size_t i = 0; i + w < s.size(); ++i) {
    if (s[i] < fwd[0]) continue;
    if (std::equal(fwd.begin() + 1, fwd.end(), s.begin() + static_cast<std::ptrdiff_t>(i + 1))) return true;
  }
  // Mirrored shape (l, S2, S1): a run must precede, the last block may be a
  // head of a longer run.
  std::vector<int> bwd = s2.runs;
  bwd.insert(bwd.end(), s1.runs.begin(), s1.runs.end());
  for (std::size_t j = 1; j + w <= s.size(); ++j) {
    if (s[j + w - 1] < bwd.back()) continue;
    if (std::equal(bwd.begin(), bwd.end() - 1, s.begin() + static_cast<std::ptrdiff_t>(j))) return true;
  }
  return false;
}

namespace {

bool is_palindrome(const std::vector<int>& v) { return std::equal(v.begin(), v.end(), v.rbegin()); }

}  // namespace

CheckOutcome verify_piece_prop(const GenusOneKnot& k) {
  CheckOutcome out;
  const std::string label = k.to_string();
  Relator rel = relator(genus_one_fraction(k));
  CanonicalDecomposition cd = canonical_decomposition(k);
  CyclicSSequence cs = cyclic_s_sequence(rel.u);

  for (const SSequence* part : {&cd.s1, &cd.s2}) {
    if (!is_palindrome(part->runs)) out.fail(label + ": " + part->to_string() + " is not symmetric");
    int occ = cyclic_occurrences(cs.runs, part->runs);
    if (occ != 2) {
      out.fail(label + ": " + part->to_string() + " occurs " + std::to_string(occ) + " times in " + cs.to_string());
    }
  }

  SymmetrizedSet r(rel.u);
  for (const CyclicWord& w : {rel.u, rel.u.inverse()}) {
    const std::size_t n = w.size();
    for (std::size_t start = 0; start < n; ++start) {
      for (std::size_t len = 1; len <= n; ++len) {
        ReducedWord v = w.cyclic_subword(start, len);
        SSequence sv = s_sequence(v);
        if (listed_piece_pattern(k, sv) && !is_piece(v, r)) {
          out.fail(label + ": subword " + v.to_string() + " with S=" + sv.to_string() + " is not a piece");
          return out;
        }
      }
    }
  }
  return out;
}

CheckOutcome verify_three_piece_property(const GenusOneKnot& k) {
  CheckOutcome out;
  Relator rel = relator(genus_one_fraction(k));
  CanonicalDecomposition cd = canonical_decomposition(k);
  SymmetrizedSet r(rel.u);
  const std::size_t n = rel.u.size();

  std::vector<std::size_t> cyclic_reach(n);
  for (std::size_t i = 0; i < n; ++i) cyclic_reach[i] = r.longest_piece_prefix(rel.u.rotation(i).letters());

  std::vector<std::size_t> reach;
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t len = 1; len <= n; ++len) {
      reach.resize(len);
      for (std::size_t j = 0; j < len; ++j) reach[j] = std::min(cyclic_reach[(start + j) % n], len - j);
      auto t = min_pieces_from_reach(reach);
      if (!t || *t != 3) continue;
      ReducedWord v = rel.u.cyclic_subword(start, len);
      if (!contains_three_piece_shape(s_sequence(v), cd.s1, cd.s2)) {
        out.fail(k.to_string() + ": 3-piece subword " + v.to_string() + " lacks an (S1,S2,l) shape");
        return out;
      }
    }
  }
  return out;
}

}  // namespace bridge
