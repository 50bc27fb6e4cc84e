#include "bridge/meridians.hpp"

#include "bridge/errors.hpp"
#include "bridge/presentation.hpp"

namespace bridge {

using namespace letters;

namespace {

ReducedWord must_be_reduced(const Word& w, const char* what) {
  if (!is_reduced(w)) throw InvariantError(std::string(what) + " is not reduced: " + w.to_string());
  return ReducedWord::checked(w);
}

std::string knot_label(const GenusOneKnot& k) { return k.to_string(); }

}  // namespace

ReducedWord c_word(std::int64_t i, std::int64_t m) {
  if (m < 1 || i < -m || i > m + 1) {
    throw DomainError("c_" + std::to_string(i) + " out of range for m=" + std::to_string(m));
  }
  if (i == 0) return ReducedWord::checked(Word{B});
  const int j = static_cast<int>(i > 0 ? i : -i);
  Word w;
  if (i > 0) {
    w = j % 2 == 0 ? alt_power({A}, {B}, j) + alt_power({a}, {b}, j - 1)
                   : alt_power({A}, {B}, j - 1) + alt_power({a}, {b}, j);
  } else {
    w = j % 2 == 0 ? alt_power({b}, {a}, j) + alt_power({B}, {A}, j + 1)
                   : alt_power({b}, {a}, j + 1) + alt_power({B}, {A}, j);
  }
  return must_be_reduced(w, "c-word");
}

std::pair<ReducedWord, ReducedWord> d0_d1(const GenusOneKnot& k) {
  ReducedWord cm = c_word(k.m(), k.m());
  ReducedWord cnm = c_word(-k.m(), k.m());
  if (k.plus()) return {cm, cnm};
  return {cnm, cm};
}

Word y_l_raw(const GenusOneKnot& k) {
  auto [d0, d1] = d0_d1(k);
  Word x, y;
  if (k.m() % 2 == 0) {
    x = d1.word();
    y = d0.inverse().word();
  } else {
    x = d1.inverse().word();
    y = d0.word();
  }
  const int n = static_cast<int>(k.n());
  return alt_power(x, y, n) + Word{B} + alt_power(x, y, -n);
}

int meridian_epsilon(const GenusOneKnot& k) { return k.n() % 2 == 0 ? 1 : -1; }

SSequence expected_w_sequence(const GenusOneKnot& k) {
  const int m = static_cast<int>(k.m());
  const std::int64_t n = k.n();
  std::vector<int> s{m};
  append_copies(s, n - 1, 2 * m);
  if (k.plus()) {
    s.push_back(m);
  } else if (m >= 2) {
    s.push_back(m - 1);
  }
  return {s};
}

SSequence expected_meridian_sequence(const GenusOneKnot& k) {
  const int m = static_cast<int>(k.m());
  const std::int64_t n = k.n();
  std::vector<int> s;
  if (k.plus() || m >= 2) {
    s.push_back(m);
    append_copies(s, n - 1, 2 * m);
    s.push_back(m);
    s.push_back(k.plus() ? m + 1 : m - 1);
    append_copies(s, n - 1, 2 * m);
    s.push_back(m);
  } else if (n >= 3) {
    s.push_back(1);
    append_copies(s, n - 1, 2);
    s.push_back(3);
    append_copies(s, n - 2, 2);
    s.push_back(1);
  } else if (n == 2) {
    s = {1, 2, 3, 1};
  } else {
    s = {1, 2};
  }
  return {s};
}

Word x_power_word(const MeridianWords& mw, int k) {
  return mw.w_x.word() + letter_power(a, k) + mw.w_x.inverse().word();
}

Word y_power_word(const MeridianWords& mw, int k) {
  return mw.w_y.word() + letter_power(B, k) + mw.w_y.inverse().word();
}

MeridianWords closed_form(const GenusOneKnot& k) {
  auto [d0, d1] = d0_d1(k);
  const SSequence ws = expected_w_sequence(k);
  ReducedWord w_x = alt_word(k.plus() ? A : b, ws);
  ReducedWord w_y = alt_word(k.plus() ? b : A, ws);
  MeridianWords mw{d0, d1, w_x, w_y, {}, {}};
  mw.x_l = must_be_reduced(x_power_word(mw, 1), "x_l");
  mw.y_l = must_be_reduced(y_power_word(mw, 1), "y_l");

  const int eps = meridian_epsilon(k);
  const SSequence expected = expected_meridian_sequence(k);
  auto power_seq = [eps](const ReducedWord& w) { return s_sequence(eps > 0 ? w : w.inverse()); };
  if (power_seq(mw.x_l) != expected || power_seq(mw.y_l) != expected) {
    throw InvariantError("closed-form meridian S-sequence mismatch for " + knot_label(k) + ": S(x_l^eps)=" +
                         power_seq(mw.x_l).to_string() + " expected " + expected.to_string());
  }
  if (!is_alternating(mw.x_l) || !is_alternating(mw.y_l)) {
    throw InvariantError("closed-form meridian words not alternating for " + knot_label(k));
  }
  return mw;
}

namespace {

void expect_ends(CheckOutcome& out, const std::string& label, const ReducedWord& w, Letter first, Letter last,
                 const std::string& name) {
  if (w.empty() || w.front() != first || w.back() != last) {
    out.fail(label + ": " + name + "=" + w.to_string() + " should read " + std::string(1, first.to_char()) + "..." +
             std::string(1, last.to_char()));
  }
}

void expect_first(CheckOutcome& out, const std::string& label, const ReducedWord& w, Letter first,
                  const std::string& name) {
  if (w.empty() || w.front() != first) {
    out.fail(label + ": " + name + "=" + w.to_string() + " should begin with " + std::string(1, first.to_char()));
  }
}

}  // namespace

CheckOutcome verify_meridian_forms(const GenusOneKnot& k, int k_max) {
  CheckOutcome out;
  MeridianWords mw;
  try {
    mw = closed_form(k);
  } catch (const InvariantError& e) {
    out.fail(e.what());
    return out;
  }
  const std::string label = knot_label(k);

  ReducedWord raw = free_reduce(y_l_raw(k));
  if (raw != mw.y_l) out.fail(label + ": reduced raw y_l " + raw.to_string() + " != closed form " + mw.y_l.to_string());
  if (apply_f(mw.y_l) != mw.x_l) out.fail(label + ": f(y_l) != x_l");
  if (free_reduce(apply_f(y_l_raw(k))) != mw.x_l) out.fail(label + ": reduced f(raw y_l) != x_l");
  if (s_sequence(mw.w_x) != s_sequence(mw.w_y)) out.fail(label + ": S(w_x) != S(w_y)");

  const int eps = meridian_epsilon(k);
  if (k.plus()) {
    expect_ends(out, label, mw.w_x, A, eps > 0 ? B : b, "w_x");
    expect_ends(out, label, mw.w_y, b, eps > 0 ? a : A, "w_y");
    expect_ends(out, label, mw.x_l, A, a, "x_l");
    expect_ends(out, label, mw.y_l, b, B, "y_l");
  } else {
    if (k.m() == 1 && k.n() == 1) {
      if (mw.w_x != ReducedWord::parse("b") || mw.w_y != ReducedWord::parse("A")) {
        out.fail(label + ": exceptional case needs w_x = b, w_y = A");
      }
    } else {
      expect_first(out, label, mw.w_x, b, "w_x");
      expect_first(out, label, mw.w_y, A, "w_y");
    }
    expect_ends(out, label, mw.x_l, b, B, "x_l");
    expect_ends(out, label, mw.y_l, A, a, "y_l");
  }

  for (int e = -k_max; e <= k_max; ++e) {
    if (e == 0) continue;
    const std::string tag = label + " k=" + std::to_string(e);
    for (int which = 0; which < 2; ++which) {
      const ReducedWord& base = which == 0 ? mw.x_l : mw.y_l;
      Word explicit_word = which == 0 ? x_power_word(mw, e) : y_power_word(mw, e);
      Word formal;
      for (int i = 0; i < (e > 0 ? e : -e); ++i) formal += e > 0 ? base.word() : base.inverse().word();
      if (!is_reduced(explicit_word)) {
        out.fail(tag + ": conjugate power word not reduced");
        continue;
      }
      ReducedWord explicit_reduced = ReducedWord::checked(explicit_word);
      if (free_reduce(formal) != explicit_reduced) out.fail(tag + ": power identity fails");
      const bool alternating = is_alternating(explicit_reduced);
      if (alternating != (e == 1 || e == -1)) out.fail(tag + ": alternation should hold iff |k| = 1");
      Word inverse_formal;
      for (int i = 0; i < (e > 0 ? e : -e); ++i) inverse_formal += e > 0 ? base.inverse().word() : base.word();
      if (!free_reduce(formal + inverse_formal).empty()) out.fail(tag + ": x^k x^-k does not cancel");
    }
  }
  return out;
}

CheckOutcome check_stated_w_terminals(const GenusOneKnot& k) {
  CheckOutcome out;
  MeridianWords mw = closed_form(k);
  const std::string label = knot_label(k);
  const int eps = meridian_epsilon(k);
  if (k.plus()) {
    expect_ends(out, label, mw.w_x, A, eps > 0 ? B : b, "w_x");
    expect_ends(out, label, mw.w_y, b, eps > 0 ? a : A, "w_y");
  } else if (k.m() > 1 || k.n() > 1) {
    expect_ends(out, label, mw.w_x, b, eps > 0 ? b : B, "w_x");
    expect_ends(out, label, mw.w_y, A, eps > 0 ? A : a, "w_y");
  }
  return out;
}

}  // namespace bridge
