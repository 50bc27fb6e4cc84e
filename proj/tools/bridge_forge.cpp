#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bridge/errors.hpp"
#include "bridge/farey.hpp"
#include "bridge/freeness.hpp"
#include "bridge/meridians.hpp"
#include "bridge/orbifold.hpp"
#include "bridge/presentation.hpp"
#include "bridge/sl2_oracle.hpp"
#include "bridge/smallcancel.hpp"
#include "bridge/verify.hpp"

using json = nlohmann::ordered_json;
using namespace bridge;

namespace {

constexpr const char* kSchema = "bridge-forge/1";

json envelope(const std::string& command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json runs(const std::vector<int>& r) { return json(r); }

struct KnotArgs {
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::string sign = "+";

  GenusOneKnot knot() const { return GenusOneKnot(m, n, sign == "+" ? 1 : -1); }
};

void add_knot_options(CLI::App* sub, KnotArgs& k) {
  sub->add_option("--m", k.m, "m >= 1")->required();
  sub->add_option("--n", k.n, "n >= 1")->required();
  sub->add_option("--sign", k.sign, "+ or -")->required()->check(CLI::IsMember({"+", "-"}));
}

json knot_json(const GenusOneKnot& k) {
  return {{"m", k.m()}, {"n", k.n()}, {"sign", k.plus() ? "+" : "-"}, {"slope", genus_one_fraction(k).to_string()}};
}

std::string complex_str(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(15) << static_cast<double>(z.real()) << (z.imag() < 0 ? " - " : " + ")
     << static_cast<double>(std::abs(z.imag())) << "i";
  return os.str();
}

int cmd_relator(std::int64_t p, std::int64_t q, bool as_json) {
  Relator rel = relator(p, q);
  const ReducedWord& u = rel.u.representative();
  SSequence s = s_sequence(u);
  CyclicSSequence cs = cyclic_s_sequence(rel.u);
  auto knot = genus_one_params(rel.fraction);
  if (as_json) {
    json j = envelope("relator");
    j["slope"] = rel.fraction.to_string();
    j["word"] = u.to_string();
    j["length"] = u.size();
    j["s_sequence"] = runs(s.runs);
    j["cyclic_s_sequence"] = runs(cs.runs);
    if (knot) {
      CanonicalDecomposition d = canonical_decomposition(*knot);
      j["knot"] = knot_json(*knot);
      j["S1"] = runs(d.s1.runs);
      j["S2"] = runs(d.s2.runs);
      j["closed_form_holds"] = verify_cs_closed_form(*knot);
    }
    emit(j);
    return 0;
  }
  std::cout << "r      " << rel.fraction.to_string() << "\n"
            << "u_r    " << u.to_string() << "\n"
            << "|u_r|  " << u.size() << "\n"
            << "S      " << s.to_string() << "\n"
            << "CS     " << cs.to_string() << "\n";
  if (knot) {
    CanonicalDecomposition d = canonical_decomposition(*knot);
    std::cout << "knot   " << knot->to_string() << "\n"
              << "S1     " << d.s1.to_string() << "\n"
              << "S2     " << d.s2.to_string() << "\n"
              << "closed form " << (verify_cs_closed_form(*knot) ? "holds" : "FAILS") << "\n";
  }
  return 0;
}

int cmd_meridians(const GenusOneKnot& k, bool as_json) {
  MeridianWords mw = closed_form(k);
  CheckOutcome check = verify_meridian_forms(k);
  std::vector<std::pair<std::string, const ReducedWord*>> rows = {{"d0", &mw.d0},   {"d1", &mw.d1},
                                                                  {"w_x", &mw.w_x}, {"w_y", &mw.w_y},
                                                                  {"x_l", &mw.x_l}, {"y_l", &mw.y_l}};
  if (as_json) {
    json j = envelope("meridians");
    j["knot"] = knot_json(k);
    for (auto& [name, w] : rows) {
      j[name] = {{"word", w->to_string()}, {"s_sequence", w->empty() ? json::array() : runs(s_sequence(*w).runs)}};
    }
    j["identities_hold"] = check.ok;
    if (!check.ok) j["counterexample"] = check.detail;
    CheckOutcome ends = check_stated_w_terminals(k);
    j["stated_terminal_letters_hold"] = ends.ok;
    if (!ends.ok) j["terminal_letter_note"] = ends.detail;
    emit(j);
    return check.ok ? 0 : 1;
  }
  std::cout << "knot " << k.to_string() << " r = " << genus_one_fraction(k).to_string() << "\n";
  for (auto& [name, w] : rows) {
    std::cout << std::left << std::setw(4) << name << " " << w->to_string() << "  S = "
              << (w->empty() ? "()" : s_sequence(*w).to_string()) << "\n";
  }
  std::cout << "identities " << (check.ok ? "hold" : "FAIL: " + check.detail) << "\n";
  CheckOutcome ends = check_stated_w_terminals(k);
  if (!ends.ok) std::cout << "note: tabulated terminal letter disagrees with the S-sequence: " << ends.detail << "\n";
  return check.ok ? 0 : 1;
}

int cmd_pieces(const GenusOneKnot& k, const std::string& word, bool as_json) {
  Relator rel = relator(genus_one_fraction(k));
  SymmetrizedSet rs = symmetrized_set(rel.u);
  if (!word.empty()) {
    PieceReport pr = piece_report(ReducedWord::parse(word), rs);
    if (as_json) {
      json j = envelope("pieces");
      j["knot"] = knot_json(k);
      j["word"] = pr.word.to_string();
      j["is_piece"] = pr.is_piece;
      j["min_pieces"] = pr.min_pieces ? json(*pr.min_pieces) : json(nullptr);
      emit(j);
    } else {
      std::cout << "word       " << pr.word.to_string() << "\n"
                << "is_piece   " << (pr.is_piece ? "yes" : "no") << "\n"
                << "min_pieces " << (pr.min_pieces ? std::to_string(*pr.min_pieces) : "n/a (not a relator subword)")
                << "\n";
    }
    return 0;
  }
  CheckOutcome prop = verify_piece_prop(k);
  CheckOutcome three = verify_three_piece_property(k);
  bool c4 = check_C(rs, 4);
  bool c5 = check_C(rs, 5);
  bool t4 = check_T(rs, 4);
  bool ok = prop.ok && three.ok && c4 && t4;
  if (as_json) {
    json j = envelope("pieces");
    j["knot"] = knot_json(k);
    j["symmetrized_size"] = rs.size();
    j["piece_prop"] = {{"ok", prop.ok}, {"detail", prop.detail}};
    j["three_piece"] = {{"ok", three.ok}, {"detail", three.detail}};
    j["C4"] = c4;
    j["C5"] = c5;
    j["T4"] = t4;
    emit(j);
  } else {
    std::cout << "knot " << k.to_string() << ", |R| = " << rs.size() << "\n"
              << "piece_prop  " << (prop.ok ? "pass" : "FAIL: " + prop.detail) << "\n"
              << "three_piece " << (three.ok ? "pass" : "FAIL: " + three.detail) << "\n"
              << "C(4) " << (c4 ? "yes" : "no") << "  C(5) " << (c5 ? "yes" : "no") << "  T(4) "
              << (t4 ? "yes" : "no") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_freeness(const GenusOneKnot& k, int t_max, int scan_letters, bool as_json) {
  json cases = json::array();
  bool ok = true;
  if (!as_json) std::cout << "knot " << k.to_string() << ", rule: " << forbidden_rule(k) << "\n";
  for (int t = 1; t <= t_max; ++t) {
    for (const SignPattern& s : all_sign_patterns(t)) {
      CsWPrimeReport r = verify_claim2(k, s);
      ok = ok && r.ok();
      std::string expected = r.closed_form_supported ? cs_w_prime_closed_form(k, s).to_string() : "";
      if (as_json) {
        cases.push_back({{"signs", s.to_string()},
                         {"cs_w_prime", runs(r.computed.runs)},
                         {"closed_form_supported", r.closed_form_supported},
                         {"closed_form", expected},
                         {"closed_form_matches", r.closed_form_matches},
                         {"forbidden_terms_ok", r.forbidden_terms_ok}});
      } else {
        std::cout << std::left << std::setw(24) << s.to_string() << " CS(w') = " << r.computed.to_string();
        if (!r.closed_form_supported) {
          std::cout << "  closed form unsupported";
        } else if (!r.closed_form_matches) {
          std::cout << "  MISMATCH, closed form " << expected;
        }
        std::cout << (r.forbidden_terms_ok ? "" : "  FORBIDDEN TERM") << "\n";
      }
    }
  }
  json j = envelope("freeness");
  if (as_json) {
    j["knot"] = knot_json(k);
    j["rule"] = forbidden_rule(k);
    j["cases"] = cases;
  }
  if (scan_letters > 0) {
    ScanReport sr = no_relation_scan(k, scan_letters, 1e-9);
    ok = ok && sr.hits.empty() && sr.roots > 0;
    if (as_json) {
      json hits = json::array();
      for (const RelationHit& h : sr.hits) hits.push_back({{"word", h.word}, {"root", h.root}, {"distance", h.distance}});
      j["scan"] = {{"syllables", scan_letters},        {"roots", sr.roots},
                   {"words_checked", sr.words_checked}, {"max_relator_residual", sr.max_relator_residual},
                   {"min_distance", sr.min_distance},   {"closest_word", sr.closest_word},
                   {"hits", hits},                      {"warnings", sr.warnings}};
    } else {
      std::cout << "scan: " << sr.words_checked << " words x " << sr.roots << " roots, min distance from +-I "
                << sr.min_distance << " (" << sr.closest_word << "), max relator residual " << sr.max_relator_residual
                << ", hits " << sr.hits.size() << "\n";
      for (const std::string& w : sr.warnings) std::cout << "warning: " << w << "\n";
    }
  }
  if (as_json) emit(j);
  return ok ? 0 : 1;
}

int cmd_reps(std::int64_t p, std::int64_t q, bool as_json) {
  Fraction f(q, p);
  RileyData rd = riley_polynomials(f);
  std::vector<std::string> warnings;
  std::vector<NumericRep> reps = numeric_reps(f, 1e-9L, &warnings);
  if (as_json) {
    json j = envelope("reps");
    j["slope"] = f.to_string();
    j["polynomial"] = rd.gcd.to_string();
    json roots = json::array();
    for (const NumericRep& r : reps) {
      roots.push_back({{"re", static_cast<double>(r.omega.real())},
                       {"im", static_cast<double>(r.omega.imag())},
                       {"residual", static_cast<double>(r.residual)}});
    }
    j["roots"] = roots;
    j["warnings"] = warnings;
    emit(j);
    return 0;
  }
  std::cout << "r = " << f.to_string() << "\nRiley polynomial " << rd.gcd.to_string() << "\n";
  for (const NumericRep& r : reps) {
    std::cout << "omega = " << complex_str(r.omega) << "  residual " << static_cast<double>(r.residual) << "\n";
  }
  for (const std::string& w : warnings) std::cout << "warning: " << w << "\n";
  return 0;
}

json verdict_json(const SubgroupVerdict& v) {
  return {{"slope", v.slope.to_string()},
          {"order_in_homology", v.order_in_homology},
          {"dihedral_image_order", v.dihedral_image_order},
          {"proper", v.proper}};
}

void print_verdict(const SubgroupVerdict& v) {
  std::cout << "slope " << std::left << std::setw(10) << v.slope.to_string() << " homology order "
            << v.order_in_homology << ", dihedral image order " << v.dihedral_image_order
            << (v.proper ? ", proper" : ", not proper") << "\n";
}

int cmd_orbifold(std::int64_t m, const std::string& slope, bool as_json) {
  FamilyVerdict fv = theorem2_case(m);
  std::optional<SubgroupVerdict> extra;
  if (!slope.empty()) extra = subgroup_verdict(Fraction::parse(slope), fv.first.knot);
  if (as_json) {
    json j = envelope("orbifold");
    j["m"] = m;
    j["knot_slope"] = fv.first.knot.to_string();
    j["family"] = {verdict_json(fv.first), verdict_json(fv.second)};
    if (extra) j["slope"] = verdict_json(*extra);
    emit(j);
    return 0;
  }
  std::cout << "r = " << fv.first.knot.to_string() << ", |H_1| = " << homology_order(fv.first.knot) << "\n";
  print_verdict(fv.first);
  print_verdict(fv.second);
  if (extra) print_verdict(*extra);
  return 0;
}

int cmd_epi(const std::string& source, const std::string& target, int depth, int bound, bool as_json) {
  EpimorphismResult res = epimorphism_exists(Fraction::parse(source), Fraction::parse(target), depth, bound);
  const char* note = "unknown is a bounded-search outcome, not a proof that no epimorphism exists";
  json path = json::array();
  ExtRational cur = res.orbit.start;
  for (std::size_t g : res.orbit.path) {
    const Generator& gen = res.generators[g];
    ExtRational next = gen.reflection.apply(cur);
    path.push_back({{"edge", gen.edge.to_string()},
                    {"matrix", gen.reflection.to_string()},
                    {"from", cur.to_string()},
                    {"to", next.to_string()}});
    cur = next;
  }
  if (as_json) {
    json j = envelope("epi");
    j["source"] = source;
    j["target"] = target;
    j["depth"] = depth;
    j["neighbors"] = bound;
    j["verdict"] = to_string(res.verdict);
    j["cap_hits"] = res.cap_hits;
    if (res.verdict == Verdict::yes) {
      j["orbit_of"] = res.base.to_string();
      j["matched"] = res.tested_target.to_string();
      j["start"] = res.orbit.start.to_string();
      j["witness"] = path;
    } else {
      j["note"] = note;
    }
    emit(j);
    return 0;
  }
  std::cout << "verdict " << to_string(res.verdict) << "\n";
  if (res.verdict == Verdict::yes) {
    std::cout << "matched " << res.tested_target.to_string() << " in the orbit of {" << res.base.to_string()
              << ", inf}, starting at " << res.orbit.start.to_string() << "\n";
    for (const json& step : path) {
      std::cout << "  reflect in " << step["edge"].get<std::string>() << ": " << step["from"].get<std::string>()
                << " -> " << step["to"].get<std::string>() << "\n";
    }
  } else {
    std::cout << note << "\n";
  }
  if (res.cap_hits > 0) std::cout << "denominator cap hits: " << res.cap_hits << "\n";
  return 0;
}

json report_json(const VerificationReport& rep) {
  json j = envelope("verify-all");
  j["m_max"] = rep.m_max;
  j["n_max"] = rep.n_max;
  j["scan"] = rep.flags.scan;
  json knots = json::array();
  for (const KnotReport& k : rep.knots) {
    json kj = knot_json(k.knot);
    kj["truncated"] = k.truncated;
    json checks = json::array();
    for (const CheckRecord& c : k.checks) {
      json cj = {{"name", c.name}, {"status", to_string(c.status)}, {"elapsed_ms", c.elapsed_ms}};
      if (!c.counterexample.empty()) cj[c.status == CheckStatus::fail ? "counterexample" : "note"] = c.counterexample;
      checks.push_back(cj);
    }
    kj["checks"] = checks;
    knots.push_back(kj);
  }
  j["knots"] = knots;
  j["truncated"] = rep.truncated();
  j["exit_code"] = rep.exit_code();
  return j;
}

void print_report(const VerificationReport& rep) {
  std::vector<std::string> names = battery(rep.flags);
  std::cout << std::left << std::setw(12) << "knot";
  for (const std::string& n : names) std::cout << " " << n;
  std::cout << "\n";
  std::size_t fails = 0;
  for (const KnotReport& k : rep.knots) {
    std::cout << std::left << std::setw(12) << k.knot.to_string();
    if (k.truncated) {
      std::cout << " TRUNCATED\n";
      continue;
    }
    for (std::size_t i = 0; i < k.checks.size(); ++i) {
      const CheckRecord& c = k.checks[i];
      std::string mark = c.status == CheckStatus::pass ? "ok" : c.status == CheckStatus::fail ? "FAIL" : "n/a";
      std::cout << " " << std::setw(static_cast<int>(names[i].size())) << mark;
    }
    std::cout << "\n";
  }
  for (const KnotReport& k : rep.knots) {
    for (const CheckRecord& c : k.checks) {
      if (c.status != CheckStatus::fail) continue;
      ++fails;
      std::cout << k.knot.to_string() << " " << c.name << ": " << c.counterexample << "\n";
    }
  }
  std::cout << fails << " failing checks" << (rep.truncated() ? ", report truncated" : "") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial verification for genus-one 2-bridge knot groups"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  std::int64_t p = 0, q = 0;
  auto* relator_cmd = app.add_subcommand("relator", "Relator u_r of G(K(q/p)) and its S-sequences");
  relator_cmd->add_option("--p", p)->required();
  relator_cmd->add_option("--q", q)->required();

  KnotArgs merid_k;
  auto* merid_cmd = app.add_subcommand("meridians", "Long meridian pair words");
  add_knot_options(merid_cmd, merid_k);

  KnotArgs piece_k;
  std::string piece_word;
  auto* pieces_cmd = app.add_subcommand("pieces", "Piece analysis of the symmetrized relator set");
  add_knot_options(pieces_cmd, piece_k);
  pieces_cmd->add_option("--word", piece_word, "word over a, A, b, B");

  KnotArgs free_k;
  int t_max = 2, scan_letters = 0;
  auto* free_cmd = app.add_subcommand("freeness", "CS(w') closed forms and the numeric no-relation scan");
  add_knot_options(free_cmd, free_k);
  free_cmd->add_option("--t", t_max, "maximal number of (x, y) factor pairs")->check(CLI::Range(1, 4));
  free_cmd->add_option("--scan-syllables", scan_letters, "scan words up to this many letters")->check(CLI::Range(0, 8));

  std::int64_t rp = 0, rq = 0;
  auto* reps_cmd = app.add_subcommand("reps", "Parabolic SL(2,C) representations");
  reps_cmd->add_option("--p", rp)->required();
  reps_cmd->add_option("--q", rq)->required();

  std::int64_t orb_m = 0;
  std::string orb_slope;
  auto* orb_cmd = app.add_subcommand("orbifold", "Dihedral images of arc subgroups for r = 2m/(4m^2-1)");
  orb_cmd->add_option("--m", orb_m)->required()->check(CLI::PositiveNumber);
  orb_cmd->add_option("--slope", orb_slope, "additional arc slope u/v");

  std::string epi_source, epi_target;
  int epi_depth = 3, epi_bound = 2;
  auto* epi_cmd = app.add_subcommand("epi", "Farey-orbit search for an epimorphism G(K(source)) -> G(K(target))");
  epi_cmd->add_option("--source", epi_source)->required();
  epi_cmd->add_option("--target", epi_target)->required();
  epi_cmd->add_option("--depth", epi_depth)->check(CLI::NonNegativeNumber);
  epi_cmd->add_option("--neighbors", epi_bound)->check(CLI::NonNegativeNumber);

  std::int64_t m_max = 2, n_max = 2;
  VerifyFlags flags;
  auto* verify_cmd = app.add_subcommand("verify-all", "Run the full battery over a grid of (m, n, sign)");
  verify_cmd->add_option("--m-max", m_max);
  verify_cmd->add_option("--n-max", n_max);
  verify_cmd->add_option("--jobs", flags.jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--scan", flags.scan, "include the numeric no-relation scan");
  verify_cmd->add_option("--scan-syllables", flags.scan_letters)->check(CLI::Range(1, 8));
  verify_cmd->add_option("--time-limit", flags.time_limit_s, "seconds; remaining cells are marked truncated");

  for (CLI::App* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*relator_cmd) return cmd_relator(p, q, as_json);
    if (*merid_cmd) return cmd_meridians(merid_k.knot(), as_json);
    if (*pieces_cmd) return cmd_pieces(piece_k.knot(), piece_word, as_json);
    if (*free_cmd) return cmd_freeness(free_k.knot(), t_max, scan_letters, as_json);
    if (*reps_cmd) return cmd_reps(rp, rq, as_json);
    if (*orb_cmd) return cmd_orbifold(orb_m, orb_slope, as_json);
    if (*epi_cmd) return cmd_epi(epi_source, epi_target, epi_depth, epi_bound, as_json);
    if (*verify_cmd) {
      VerificationReport rep = verify_all(m_max, n_max, flags);
      if (as_json) {
        emit(report_json(rep));
      } else {
        print_report(rep);
      }
      return rep.exit_code();
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
