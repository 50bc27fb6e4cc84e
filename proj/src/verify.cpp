#include "bridge/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "bridge/errors.hpp"
#include "bridge/freeness.hpp"
#include "bridge/meridians.hpp"
#include "bridge/orbifold.hpp"
#include "bridge/presentation.hpp"
#include "bridge/smallcancel.hpp"

namespace bridge {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

Outcome from_bool(bool ok, std::string why) {
  if (ok) return {};
  return {CheckStatus::fail, std::move(why)};
}

Outcome from_check(const CheckOutcome& c) {
  if (c.ok) return {};
  return {CheckStatus::fail, c.detail};
}

CheckRecord timed(const std::string& name, const std::function<Outcome()>& body) {
  CheckRecord rec;
  rec.name = name;
  auto start = Clock::now();
  try {
    Outcome o = body();
    rec.status = o.status;
    rec.counterexample = std::move(o.detail);
  } catch (const Unsupported& e) {
    rec.status = CheckStatus::unsupported;
    rec.counterexample = e.what();
  } catch (const std::exception& e) {
    rec.status = CheckStatus::fail;
    rec.counterexample = std::string("exception: ") + e.what();
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return rec;
}

bool is_trefoil(const GenusOneKnot& k) { return k.m() == 1 && k.n() == 1 && !k.plus(); }

Outcome claim2_closed_form(const GenusOneKnot& k) {
  if (is_trefoil(k)) return {CheckStatus::unsupported, "no closed form for (1,1,-); bound check only"};
  for (int t = 1; t <= 2; ++t) {
    for (const SignPattern& s : all_sign_patterns(t)) {
      CsWPrimeReport r = verify_claim2(k, s);
      if (!r.closed_form_matches) {
        return {CheckStatus::fail, "signs " + s.to_string() + ": computed " + r.computed.to_string() + ", expected " +
                                       cs_w_prime_closed_form(k, s).to_string()};
      }
    }
  }
  return {};
}

Outcome claim2_forbidden(const GenusOneKnot& k) {
  for (int t = 1; t <= 2; ++t) {
    for (const SignPattern& s : all_sign_patterns(t)) {
      CsWPrimeReport r = verify_claim2(k, s);
      if (!r.forbidden_terms_ok) {
        return {CheckStatus::fail, "signs " + s.to_string() + ": " + r.computed.to_string() + " violates " +
                                       forbidden_rule(k)};
      }
    }
  }
  return {};
}

Outcome theorem2_check(const GenusOneKnot& k) {
  if (k.plus() || k.m() != k.n() || k.m() < 2) {
    return {CheckStatus::unsupported, "applies to r = 2m/(4m^2-1), m >= 2 only"};
  }
  FamilyVerdict v = theorem2_case(k.m());
  const std::int64_t m = k.m();
  bool ok = v.first.order_in_homology == 2 * m + 1 && v.second.order_in_homology == 2 * m - 1 &&
            v.first.dihedral_image_order == 2 * v.first.order_in_homology &&
            v.second.dihedral_image_order == 2 * v.second.order_in_homology && v.first.proper && v.second.proper;
  std::ostringstream why;
  why << "subgroup orders " << v.first.order_in_homology << ", " << v.second.order_in_homology;
  return from_bool(ok, why.str());
}

Outcome scan_check(const GenusOneKnot& k, const VerifyFlags& flags) {
  ScanReport r = no_relation_scan(k, flags.scan_letters, flags.scan_tol);
  std::ostringstream why;
  if (r.roots == 0) return {CheckStatus::fail, "no representation roots"};
  if (!r.hits.empty()) {
    why << r.hits.size() << " near-relations, first " << r.hits.front().word << " at root "
        << r.hits.front().root << " distance " << r.hits.front().distance;
    return {CheckStatus::fail, why.str()};
  }
  return {};
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::unsupported:
      return "unsupported";
  }
  return "?";
}

bool KnotReport::failed() const {
  for (const CheckRecord& c : checks) {
    if (c.status == CheckStatus::fail) return true;
  }
  return false;
}

bool VerificationReport::truncated() const {
  for (const KnotReport& k : knots) {
    if (k.truncated) return true;
  }
  return false;
}

bool VerificationReport::failed() const {
  for (const KnotReport& k : knots) {
    if (k.failed()) return true;
  }
  return false;
}

int VerificationReport::exit_code() const {
  if (failed()) return 1;
  if (truncated()) return 3;
  return 0;
}

std::vector<std::string> battery(const VerifyFlags& flags) {
  std::vector<std::string> names = {"cs_closed_form", "meridian_forms",       "piece_prop",           "three_piece",
                                    "C4",             "T4",                   "claim2_closed_form",   "claim2_forbidden_terms",
                                    "theorem2"};
  if (flags.scan) names.push_back("no_relation_scan");
  return names;
}

KnotReport verify_knot(const GenusOneKnot& k, const VerifyFlags& flags) {
  KnotReport rep;
  rep.knot = k;
  const Relator rel = relator(genus_one_fraction(k));
  const SymmetrizedSet rs = symmetrized_set(CyclicWord(rel.u));

  rep.checks.push_back(timed("cs_closed_form", [&] {
    return from_bool(verify_cs_closed_form(k), "CS(r) differs from ((S1,S2,S1,S2))");
  }));
  rep.checks.push_back(timed("meridian_forms", [&] { return from_check(verify_meridian_forms(k)); }));
  rep.checks.push_back(timed("piece_prop", [&] { return from_check(verify_piece_prop(k)); }));
  rep.checks.push_back(timed("three_piece", [&] { return from_check(verify_three_piece_property(k)); }));
  rep.checks.push_back(timed("C4", [&] { return from_bool(check_C(rs, 4), "some relator is a product of < 4 pieces"); }));
  rep.checks.push_back(timed("T4", [&] { return from_bool(check_T(rs, 4), "a reduced triple r1 r2 r3 exists"); }));
  rep.checks.push_back(timed("claim2_closed_form", [&] { return claim2_closed_form(k); }));
  rep.checks.push_back(timed("claim2_forbidden_terms", [&] { return claim2_forbidden(k); }));
  rep.checks.push_back(timed("theorem2", [&] { return theorem2_check(k); }));
  if (flags.scan) rep.checks.push_back(timed("no_relation_scan", [&] { return scan_check(k, flags); }));
  return rep;
}

VerificationReport verify_all(std::int64_t m_max, std::int64_t n_max, const VerifyFlags& flags) {
  if (m_max < 1 || n_max < 1) throw DomainError("grid bounds must be >= 1");
  if (flags.jobs < 1) throw DomainError("jobs must be >= 1");

  VerificationReport report;
  report.m_max = m_max;
  report.n_max = n_max;
  report.flags = flags;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    for (std::int64_t n = 1; n <= n_max; ++n) {
      for (int sign : {1, -1}) {
        KnotReport k;
        k.knot = GenusOneKnot(m, n, sign);
        report.knots.push_back(std::move(k));
      }
    }
  }

  const auto start = Clock::now();
  auto expired = [&] {
    if (flags.time_limit_s <= 0) return false;
    return std::chrono::duration<double>(Clock::now() - start).count() > flags.time_limit_s;
  };
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= report.knots.size()) return;
      KnotReport& slot = report.knots[i];
      if (expired()) {
        slot.truncated = true;
        continue;
      }
      slot = verify_knot(slot.knot, flags);
    }
  };
  const int n_threads = std::min<int>(flags.jobs, static_cast<int>(report.knots.size()));
  std::vector<std::thread> threads;
  for (int t = 1; t < n_threads; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  return report;
}

}  // namespace bridge
