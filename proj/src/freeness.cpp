#include "bridge/freeness.hpp"

#include <algorithm>
#include <limits>

#include "bridge/errors.hpp"
#include "bridge/meridians.hpp"
#include "bridge/presentation.hpp"
#include "bridge/sl2_oracle.hpp"

namespace bridge {

std::string SignPattern::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) out += ",";
    out += "(";
    out += signs[i].first > 0 ? '+' : '-';
    out += ",";
    out += signs[i].second > 0 ? '+' : '-';
    out += ")";
  }
  return out + ")";
}

std::vector<SignPattern> all_sign_patterns(int t) {
  if (t < 1) throw DomainError("sign pattern length must be positive");
  std::vector<SignPattern> out;
  const int total = 1 << (2 * t);
  for (int mask = 0; mask < total; ++mask) {
    SignPattern s;
    for (int i = 0; i < t; ++i) {
      s.signs.emplace_back((mask >> (2 * i)) & 1 ? -1 : 1, (mask >> (2 * i + 1)) & 1 ? -1 : 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

CyclicWord build_w(const GenusOneKnot& k, const ExponentPattern& e) {
  if (e.pairs.empty()) throw DomainError("exponent pattern must be nonempty");
  MeridianWords mw = closed_form(k);
  Word w;
  for (auto [kx, ly] : e.pairs) {
    if (kx == 0 || ly == 0) throw DomainError("exponents must be nonzero");
    w += x_power_word(mw, kx);
    w += y_power_word(mw, ly);
  }
  if (!is_cyclically_reduced(w)) throw InvariantError("relation word w is not cyclically reduced: " + w.to_string());
  return CyclicWord(ReducedWord::checked(std::move(w)));
}

CyclicWord build_w_prime(const GenusOneKnot& k, const SignPattern& s) {
  if (s.signs.empty()) throw DomainError("sign pattern must be nonempty");
  MeridianWords mw = closed_form(k);
  Word w;
  for (auto [ex, ey] : s.signs) {
    w += ex > 0 ? mw.x_l.word() : mw.x_l.inverse().word();
    w += ey > 0 ? mw.y_l.word() : mw.y_l.inverse().word();
  }
  if (!is_cyclically_reduced(w)) throw InvariantError("w' is not cyclically reduced: " + w.to_string());
  CyclicWord cw(ReducedWord::checked(std::move(w)));
  if (!is_cyclically_alternating(cw)) {
    throw InvariantError("w' is not cyclically alternating: " + cw.representative().to_string());
  }
  return cw;
}

std::vector<int> closed_form_orientations(const GenusOneKnot& k, const SignPattern& s) {
  // A factor whose exponent sign agrees with (-1)^n contributes its tabulated
  // S-sequence; otherwise the reversed one. The middle pair is (m+1, m) in
  // the plus case and (m, m-1) in the minus case after that reading.
  const int eps = meridian_epsilon(k);
  const int flip = k.plus() ? -eps : eps;
  std::vector<int> out;
  for (auto [ex, ey] : s.signs) {
    out.push_back(ex * flip);
    out.push_back(ey * flip);
  }
  return out;
}

CyclicSSequence cs_w_prime_closed_form(const GenusOneKnot& k, const SignPattern& s) {
  const int m = static_cast<int>(k.m());
  const std::int64_t n = k.n();
  if (!k.plus() && m == 1 && n == 1) {
    throw Unsupported("no closed form for CS(w') when r = [2,-2]; use the {2,3,4} bound");
  }
  std::vector<int> runs;
  for (int orient : closed_form_orientations(k, s)) {
    if (k.plus()) {
      append_copies(runs, 2 * n - 1, 2 * m);
      runs.push_back(orient > 0 ? m + 1 : m);
      runs.push_back(orient > 0 ? m : m + 1);
    } else if (m >= 2) {
      append_copies(runs, 2 * n - 1, 2 * m);
      runs.push_back(orient > 0 ? m : m - 1);
      runs.push_back(orient > 0 ? m - 1 : m);
    } else {
      append_copies(runs, 2 * n - 2, 2);
      runs.push_back(3);
    }
  }
  return {runs};
}

CyclicSSequence cs_w_prime_from_tables(const GenusOneKnot& k, const SignPattern& s) {
  const SSequence base = expected_meridian_sequence(k);
  const int eps = meridian_epsilon(k);
  std::vector<int> runs;
  for (auto [ex, ey] : s.signs) {
    for (int e : {ex, ey}) {
      SSequence part = e == eps ? base : base.reversed();
      // Consecutive factors meet in letters of equal sign, so the boundary
      // runs merge.
      if (!runs.empty()) {
        runs.back() += part.runs.front();
        runs.insert(runs.end(), part.runs.begin() + 1, part.runs.end());
      } else {
        runs = part.runs;
      }
    }
  }
  if (runs.size() > 1) {
    runs.front() += runs.back();
    runs.pop_back();
  }
  return {runs};
}

std::optional<int> forbidden_term(const GenusOneKnot& k, const CyclicSSequence& cs) {
  const int m = static_cast<int>(k.m());
  for (int x : cs.runs) {
    if (k.plus()) {
      if (x >= 2 * m + 1) return x;
    } else if (m >= 2) {
      if (x == 2 * m - 1) return x;
    } else if (k.n() >= 2) {
      if (x == 1) return x;
    } else if (x < 2 || x > 4) {
      return x;
    }
  }
  return std::nullopt;
}

std::string forbidden_rule(const GenusOneKnot& k) {
  if (k.plus()) return "no term >= 2m+1";
  if (k.m() >= 2) return "no term = 2m-1";
  if (k.n() >= 2) return "no term = 1";
  return "every term in {2,3,4}";
}

CsWPrimeReport verify_claim2(const GenusOneKnot& k, const SignPattern& s) {
  CsWPrimeReport res;
  CyclicWord w = build_w_prime(k, s);
  res.computed = cyclic_s_sequence(w);
  try {
    CyclicSSequence closed = cs_w_prime_closed_form(k, s);
    res.closed_form_matches = closed == res.computed;
    if (!res.closed_form_matches) {
      res.detail = k.to_string() + " signs " + s.to_string() + ": CS(w')=" + res.computed.to_string() +
                   " but closed form gives " + closed.to_string();
    }
  } catch (const Unsupported&) {
    res.closed_form_supported = false;
  }
  if (auto bad = forbidden_term(k, res.computed)) {
    res.forbidden_terms_ok = false;
    if (res.detail.empty()) {
      res.detail = k.to_string() + " signs " + s.to_string() + ": CS(w')=" + res.computed.to_string() +
                   " violates '" + forbidden_rule(k) + "' with term " + std::to_string(*bad);
    }
  }
  return res;
}

namespace {

struct ScanState {
  const std::vector<Mat2>* gens = nullptr;  // x, X, y, Y
  double tol = 0;
  std::size_t root = 0;
  int max_letters = 0;
  std::string word;
  ScanReport* report = nullptr;
};

constexpr char kScanLetters[4] = {'x', 'X', 'y', 'Y'};

void scan_words(ScanState& st, const Mat2& acc, int last) {
  if (static_cast<int>(st.word.size()) == st.max_letters) return;
  for (int g = 0; g < 4; ++g) {
    if (last >= 0 && (g ^ 1) == last) continue;  // x X, y Y cancel
    Mat2 next = acc * (*st.gens)[static_cast<std::size_t>(g)];
    st.word.push_back(kScanLetters[g]);
    const double d = static_cast<double>(distance_from_pm_identity(next));
    ++st.report->words_checked;
    if (d < st.report->min_distance) {
      st.report->min_distance = d;
      st.report->closest_word = st.word;
    }
    if (d <= st.tol) st.report->hits.push_back({st.word, st.root, d});
    scan_words(st, next, g);
    st.word.pop_back();
  }
}

}  // namespace

ScanReport no_relation_scan(const GenusOneKnot& k, int max_letters, double tol) {
  if (max_letters < 1) throw DomainError("max_letters must be positive");
  ScanReport report;
  report.min_distance = std::numeric_limits<double>::infinity();
  std::vector<NumericRep> reps = numeric_reps(genus_one_fraction(k), 1e-9L, &report.warnings);
  if (reps.empty()) throw InvariantError("no parabolic representation found for " + k.to_string());
  report.roots = reps.size();
  MeridianWords mw = closed_form(k);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    report.max_relator_residual = std::max(report.max_relator_residual, static_cast<double>(reps[i].residual));
    Mat2 x = evaluate(mw.x_l.word(), reps[i]);
    Mat2 y = evaluate(mw.y_l.word(), reps[i]);
    std::vector<Mat2> gens{x, x.inverse(), y, y.inverse()};
    ScanState st{&gens, tol, i, max_letters, {}, &report};
    scan_words(st, Mat2::identity(), -1);
  }
  return report;
}

}  // namespace bridge
