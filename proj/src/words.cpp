#include "bridge/words.hpp"

#include <algorithm>
#include <numeric>

#include "bridge/errors.hpp"

namespace bridge {

char Letter::to_char() const {
  if (gen == Gen::A) return sign > 0 ? 'a' : 'A';
  return sign > 0 ? 'b' : 'B';
}

Letter Letter::from_char(char c) {
  switch (c) {
    case 'a': return letters::a;
    case 'A': return letters::A;
    case 'b': return letters::b;
    case 'B': return letters::B;
    default: throw DomainError(std::string("invalid letter '") + c + "' (expected a, A, b, B)");
  }
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(Letter::from_char(c));
  return Word(std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.size());
  std::transform(letters_.rbegin(), letters_.rend(), out.begin(), [](Letter l) { return l.inverse(); });
  return Word(std::move(out));
}

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(l.to_char());
  return out;
}

ReducedWord ReducedWord::checked(Word w) {
  if (!is_reduced(w)) throw DomainError("word is not freely reduced: " + w.to_string());
  return ReducedWord(std::move(w));
}

ReducedWord ReducedWord::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > size()) throw DomainError("subword out of range");
  auto l = letters();
  return ReducedWord(Word(std::vector<Letter>(l.begin() + pos, l.begin() + pos + len)));
}

CyclicWord::CyclicWord(ReducedWord w) : rep_(std::move(w)) {
  if (!is_cyclically_reduced(rep_.word())) {
    throw DomainError("word is not cyclically reduced: " + rep_.to_string());
  }
}

ReducedWord CyclicWord::rotation(std::size_t i) const {
  const std::size_t n = size();
  if (n == 0) return rep_;
  return cyclic_subword(i % n, n);
}

ReducedWord CyclicWord::cyclic_subword(std::size_t pos, std::size_t len) const {
  const std::size_t n = size();
  if (len > n) throw DomainError("cyclic subword longer than the cycle");
  std::vector<Letter> out;
  out.reserve(len);
  auto l = rep_.letters();
  for (std::size_t k = 0; k < len; ++k) out.push_back(l[(pos + k) % n]);
  // Any window of a cyclically reduced word is reduced.
  return ReducedWord::checked(Word(std::move(out)));
}

bool operator==(const CyclicWord& x, const CyclicWord& y) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  auto xs = x.rep_.letters();
  auto ys = y.rep_.letters();
  const std::size_t n = xs.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t k = 0; k < n && match; ++k) match = xs[(shift + k) % n] == ys[k];
    if (match) return true;
  }
  return false;
}

int SSequence::total() const { return std::accumulate(runs.begin(), runs.end(), 0); }

SSequence SSequence::reversed() const { return {std::vector<int>(runs.rbegin(), runs.rend())}; }

namespace {

std::string join_runs(const std::vector<int>& runs) {
  std::string out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(runs[i]);
  }
  return out;
}

}  // namespace

std::string SSequence::to_string() const { return "(" + join_runs(runs) + ")"; }

int CyclicSSequence::total() const { return std::accumulate(runs.begin(), runs.end(), 0); }

CyclicSSequence CyclicSSequence::reversed() const { return {std::vector<int>(runs.rbegin(), runs.rend())}; }

CyclicSSequence CyclicSSequence::canonical() const {
  if (runs.empty()) return *this;
  std::vector<int> best = runs;
  std::vector<int> cur = runs;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return {best};
}

std::string CyclicSSequence::to_string() const { return "((" + join_runs(runs) + "))"; }

bool is_rotation(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) return false;
  const std::size_t n = x.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t k = 0; k < n && match; ++k) match = x[(shift + k) % n] == y[k];
    if (match) return true;
  }
  return false;
}

bool operator==(const CyclicSSequence& x, const CyclicSSequence& y) { return is_rotation(x.runs, y.runs); }

ReducedWord free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w.letters()) {
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return ReducedWord(Word(std::move(stack)));
}

bool is_reduced(const Word& w) {
  auto l = w.letters();
  for (std::size_t i = 1; i < l.size(); ++i) {
    if (l[i - 1].is_inverse_of(l[i])) return false;
  }
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || !w[0].is_inverse_of(w[w.size() - 1]);
}

Word alt_power(const Word& x, const Word& y, int k) {
  if (k < 0) return alt_power(x, y, -k).inverse();
  Word out;
  for (int i = 0; i < k; ++i) out += (i % 2 == 0) ? x : y;
  return out;
}

SSequence s_sequence(const ReducedWord& v) {
  if (v.empty()) throw DomainError("S-sequence of the empty word is undefined");
  SSequence s;
  int prev = 0;
  for (Letter l : v.letters()) {
    if (l.sign == prev) {
      ++s.runs.back();
    } else {
      s.runs.push_back(1);
      prev = l.sign;
    }
  }
  return s;
}

CyclicSSequence cyclic_s_sequence(const CyclicWord& v) {
  if (v.empty()) throw DomainError("cyclic S-sequence of the empty word is undefined");
  SSequence s = s_sequence(v.representative());
  const auto& rep = v.representative();
  if (s.runs.size() > 1 && rep.front().sign == rep.back().sign) {
    s.runs.front() += s.runs.back();
    s.runs.pop_back();
  }
  return {std::move(s.runs)};
}

bool is_alternating(const ReducedWord& v) {
  auto l = v.letters();
  for (std::size_t i = 1; i < l.size(); ++i) {
    if (l[i - 1].gen == l[i].gen) return false;
  }
  return true;
}

bool is_cyclically_alternating(const CyclicWord& v) {
  const auto& rep = v.representative();
  if (!is_alternating(rep)) return false;
  return rep.size() < 2 || rep.front().gen != rep.back().gen;
}

ReducedWord alt_word(Letter initial, const SSequence& s) {
  if (s.runs.empty()) throw DomainError("alt_word needs a nonempty S-sequence");
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(s.total()));
  Gen gen = initial.gen;
  int sign = initial.sign;
  for (int run : s.runs) {
    if (run < 1) throw DomainError("S-sequence entries must be positive");
    for (int i = 0; i < run; ++i) {
      out.push_back({gen, static_cast<std::int8_t>(sign)});
      gen = gen == Gen::A ? Gen::B : Gen::A;
    }
    sign = -sign;
  }
  return ReducedWord::checked(Word(std::move(out)));
}

Word apply_f(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    out.push_back({l.gen == Gen::A ? Gen::B : Gen::A, static_cast<std::int8_t>(-l.sign)});
  }
  return Word(std::move(out));
}

ReducedWord apply_f(const ReducedWord& w) { return ReducedWord::checked(apply_f(w.word())); }

Word letter_power(Letter x, int k) {
  Letter l = k >= 0 ? x : x.inverse();
  return Word(std::vector<Letter>(static_cast<std::size_t>(k >= 0 ? k : -k), l));
}

}  // namespace bridge
