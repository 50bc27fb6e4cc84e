#pragma once

// Free-group word calculus over the alphabet {a, b}.
//
// Text syntax: `a`, `b` for generators, `A`, `B` for their inverses.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bridge {

enum class Gen : std::uint8_t { A = 0, B = 1 };

struct Letter {
  Gen gen = Gen::A;
  std::int8_t sign = 1;

  constexpr Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  constexpr bool is_inverse_of(Letter other) const { return gen == other.gen && sign == -other.sign; }
  /// 0..3, used as a compact key (a, A, b, B).
  constexpr std::uint8_t code() const {
    return static_cast<std::uint8_t>(2 * static_cast<int>(gen) + (sign > 0 ? 0 : 1));
  }
  char to_char() const;
  static Letter from_char(char c);

  friend constexpr bool operator==(Letter, Letter) = default;
};

namespace letters {
inline constexpr Letter a{Gen::A, 1};
inline constexpr Letter A{Gen::A, -1};
inline constexpr Letter b{Gen::B, 1};
inline constexpr Letter B{Gen::B, -1};
}  // namespace letters

/// Arbitrary (possibly unreduced) word.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word parse(std::string_view text);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Freely reduced word. Only obtainable through free_reduce or checked().
class ReducedWord {
 public:
  ReducedWord() = default;

  /// Throws DomainError if `w` contains an adjacent inverse pair.
  static ReducedWord checked(Word w);
  static ReducedWord parse(std::string_view text) { return checked(Word::parse(text)); }

  const Word& word() const { return word_; }
  std::span<const Letter> letters() const { return word_.letters(); }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  Letter operator[](std::size_t i) const { return word_[i]; }
  Letter front() const { return word_[0]; }
  Letter back() const { return word_[word_.size() - 1]; }

  ReducedWord inverse() const { return ReducedWord(word_.inverse()); }
  ReducedWord subword(std::size_t pos, std::size_t len) const;
  std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  explicit ReducedWord(Word w) : word_(std::move(w)) {}
  friend ReducedWord free_reduce(const Word& w);

  Word word_;
};

/// Cyclically reduced word considered up to rotation.
class CyclicWord {
 public:
  /// Throws DomainError unless `w` is cyclically reduced.
  explicit CyclicWord(ReducedWord w);

  const ReducedWord& representative() const { return rep_; }
  std::size_t size() const { return rep_.size(); }
  bool empty() const { return rep_.empty(); }

  /// The representative rotated to start at position `i`.
  ReducedWord rotation(std::size_t i) const;
  /// Subword of length `len` starting at `pos`, read cyclically. `len` may
  /// not exceed the cycle length.
  ReducedWord cyclic_subword(std::size_t pos, std::size_t len) const;
  CyclicWord inverse() const { return CyclicWord(rep_.inverse()); }

  /// Visual equality of cyclic words: one representative is a rotation of the other.
  friend bool operator==(const CyclicWord& x, const CyclicWord& y);

 private:
  ReducedWord rep_;
};

/// Run lengths of maximal constant-sign blocks.
struct SSequence {
  std::vector<int> runs;

  int total() const;
  SSequence reversed() const;
  std::string to_string() const;
  friend bool operator==(const SSequence&, const SSequence&) = default;
};

/// Run lengths around a cycle, compared modulo rotation (not reversal).
struct CyclicSSequence {
  std::vector<int> runs;

  int total() const;
  CyclicSSequence reversed() const;
  /// Lexicographically least rotation; canonical representative.
  CyclicSSequence canonical() const;
  std::string to_string() const;
  friend bool operator==(const CyclicSSequence& x, const CyclicSSequence& y);
};

/// True iff `y` is a rotation of `x`.
bool is_rotation(std::span<const int> x, std::span<const int> y);

ReducedWord free_reduce(const Word& w);
bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// Alternating product <xy>^k.
Word alt_power(const Word& x, const Word& y, int k);

SSequence s_sequence(const ReducedWord& v);
CyclicSSequence cyclic_s_sequence(const CyclicWord& v);

bool is_alternating(const ReducedWord& v);
bool is_cyclically_alternating(const CyclicWord& v);

/// The alternating word with the given initial letter and S-sequence.
ReducedWord alt_word(Letter initial, const SSequence& s);

/// The substitution a -> b^-1, b -> a^-1.
Word apply_f(const Word& w);
ReducedWord apply_f(const ReducedWord& w);

/// Letterwise power x^k as a word (k may be negative).
Word letter_power(Letter x, int k);

}  // namespace bridge
