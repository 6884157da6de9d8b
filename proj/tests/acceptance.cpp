// Acceptance checks: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "eqschubert/errors.hpp"
#include "eqschubert/qhmodule.hpp"
#include "eqschubert/quantize.hpp"
#include "eqschubert/schubert.hpp"
#include "eqschubert/suites.hpp"
#include "eqschubert/universal.hpp"

using namespace eqschubert;

namespace {

using Clock = std::chrono::steady_clock;

// Time limits in seconds.
constexpr double kTable1Limit = 1.0;
constexpr double kTable2Limit = 10.0;
constexpr double kWorkedLimit = 30.0;
constexpr double kPresentationLimit = 300.0;
constexpr double kOracleLimit = 60.0;
constexpr double kStraighteningLimit = 60.0;
constexpr double kPositivityLimit = 1800.0;
constexpr double kStabilityLimit = 60.0;
constexpr double kAssociativityLimit = 600.0;
constexpr int kMinPropertyCases = 1000;

const std::string kGolden = EQSCHUBERT_GOLDEN_DIR;

Permutation W(const char* s) { return Permutation::parse(s); }
Poly P(const char* s) { return parse_poly(s); }

struct Outcome {
  bool pass = false;
  std::string detail;
  // Failure matches a documented discrepancy in the printed source data.
  bool documented = false;
};

int undocumented_failures = 0;

void run(int id, const char* name, double limit, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what(), false};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > limit) {
    o.pass = false;
    o.documented = false;
    o.detail += " [time " + std::to_string(secs) + "s over " + std::to_string(limit) + "s]";
  }
  std::printf("[%s] %2d %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass && !o.documented) ++undocumented_failures;
}

Poly zero_families(const Poly& p, std::initializer_list<Family> fams) {
  return substitute(p, [&](VarId v) -> std::optional<Poly> {
    for (Family f : fams)
      if (v.family() == f) return Poly();
    return std::nullopt;
  });
}

Outcome table1() {
  const std::vector<std::pair<const char*, const char*>> rows = {
      {"123", "1"},
      {"213", "x1 - t1"},
      {"132", "x1 + x2 - t1 - t2"},
      {"231", "x1*x2 + q1 - (x1 + x2)*t1 + t1^2"},
      {"312", "x1^2 - q1 - x1*(t1 + t2) + t1*t2"},
      {"321", "(x1 - t2)*(x1*x2 + q1 - (x1 + x2)*t1 + t1^2)"},
  };
  int ok = 0;
  std::string bad;
  for (auto& [w, text] : rows) {
    if (eq_quantum_schubert(W(w), FlagShape::complete(3)).body_x == P(text)) {
      ++ok;
    } else {
      bad += std::string(" ") + w;
    }
  }
  return {ok == 6, std::to_string(ok) + "/6 rows exact" + bad};
}

Outcome table2() {
  const auto printed = load_golden_products(kGolden + "/table2.json", false);
  const auto corrected = load_golden_products(kGolden + "/table2.json", true);
  const auto computed = multiplication_table(3);
  int ok = 0;
  std::set<std::string> bad;
  bool all_bad_corrected = true;
  for (auto& [key, want] : printed.entries) {
    const auto& got = computed.at(key.first, key.second);
    if (got == want) {
      ++ok;
      continue;
    }
    bad.insert(key.first.str() + "*" + key.second.str());
    if (got != corrected.at(key.first, key.second)) all_bad_corrected = false;
  }
  Outcome o{ok == static_cast<int>(printed.entries.size()),
            std::to_string(ok) + "/" + std::to_string(printed.entries.size()) + " rows exact", false};
  for (auto& b : bad) o.detail += "; " + b + " differs";
  if (!o.pass) {
    o.detail += " (computed (t3-t1)(t3-t2) leading coefficient; printed (t2-t1)(t3-t1) contradicts localization "
                "of Sch_312 at x1=t3)";
    o.documented = bad == std::set<std::string>{"312*312", "312*321"} && all_bad_corrected;
  }
  return o;
}

Outcome worked_expansion() {
  const Poly s = quantum_schubert(W("231"));
  const auto combo = expand_in_basis(s * s, 5);
  const std::vector<std::pair<const char*, const char*>> printed = {
      {"21", "q1*(t2 - t1)"}, {"231", "(t2 - t1)*(t3 - t1)"}, {"312", "q2"}, {"2413", "t2 - t1"}, {"3412", "1"},
  };
  int ok = 0;
  std::string bad;
  for (auto& [w, c] : printed) {
    auto it = combo.terms.find(W(w));
    if (it != combo.terms.end() && it->second == P(c)) {
      ++ok;
    } else {
      bad += std::string("; Sch_") + w + " computed " + (it == combo.terms.end() ? "0" : to_string(it->second)) +
             ", printed " + to_string(P(c));
    }
  }
  const bool same_support = combo.terms.size() == printed.size();
  const auto row = load_golden_products(kGolden + "/table2.json", false).at(W("231"), W("231"));
  const bool truncation_ok = split_by_q(truncate(combo, 3), 3) == row;
  Outcome o{ok == 5 && same_support && truncation_ok,
            std::to_string(ok) + "/5 printed terms exact" + bad + (same_support ? "" : "; extra terms") +
                "; truncation to S_3 " + (truncation_ok ? "matches" : "differs from") + " row 231*231",
            false};
  if (!o.pass) {
    const auto it = combo.terms.find(W("21"));
    o.documented = ok == 4 && same_support && truncation_ok && it != combo.terms.end() &&
                   it->second == P("q2*(t2 - t1)");
  }
  return o;
}

Outcome presentation() {
  int ok = 0;
  std::string bad;
  for (auto nn : {FlagShape::complete(2), FlagShape::complete(3), FlagShape::complete(4), FlagShape({2}, 3)}) {
    auto r = verify_presentation(nn);
    if (r.ok()) {
      ++ok;
    } else {
      bad += " " + nn.str() + ": " + r.failures.front();
    }
  }
  return {ok == 4, std::to_string(ok) + "/4 shapes reduce to zero" + bad};
}

Outcome oracle() {
  int checks = 0, bad = 0;
  for (auto& w : all_permutations(4)) {
    const Poly dd = univ_double_dd(w, 3);
    const Poly sum = d_to_y(univ_double_sum(w, 3), 3);
    bad += dd != sum;
    bad += zero_families(dd, {Family::Y}) != univ_single(w, 3);
    bad += zero_families(sum, {Family::Y}) != univ_single(w, 3);
    const Poly q = eq_quantum_schubert(w, FlagShape::complete(4)).body_x;
    bad += zero_families(q, {Family::Q}) != double_schubert(w, 4);
    bad += zero_families(q, {Family::Q, Family::T}) != classical_schubert(w, 4);
    checks += 5;
  }
  return {bad == 0, std::to_string(checks - bad) + "/" + std::to_string(checks) + " identities over S_4"};
}

Outcome straightening() {
  auto r = verify_straightening(4);
  return {r.ok(), std::to_string(r.checked) + " identities, " + std::to_string(r.failures.size()) + " violations"};
}

Outcome positivity() {
  auto r = suite_positivity(100, 2024);
  return {r.ok(), std::to_string(r.checked) + " coefficients (n=3, n=4 tables, 100 S_5 pairs), " +
                      std::to_string(r.failures.size()) + " negative"};
}

Outcome stability() {
  auto r = suite_stability();
  return {r.ok(), std::to_string(r.checked) + " window comparisons, " + std::to_string(r.failures.size()) + " differ"};
}

Outcome associativity() {
  auto r = suite_associativity(50, 2024);
  return {r.ok(), std::to_string(r.checked) + " triples (all of S_3, 50 in S_4), " +
                      std::to_string(r.failures.size()) + " mismatched"};
}

Outcome properties() {
  std::mt19937_64 rng(99);
  int cases = 0, bad = 0;
  auto random_poly = [&](const std::vector<VarId>& vars, int terms, int deg) {
    std::uniform_int_distribution<int> coeff(-4, 4), d(0, deg);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    PolyBuilder b;
    for (int i = 0; i < terms; ++i) {
      Monomial m;
      const int k = d(rng);
      for (int j = 0; j < k; ++j) m.mul_power(vars[pick(rng)], 1);
      b.add(m, coeff(rng));
    }
    return b.build();
  };
  const auto xs = var_range(Family::X, 1, 5);
  std::vector<VarId> mixed = xs;
  for (int i = 1; i <= 3; ++i) {
    mixed.push_back(VarId::t(i));
    mixed.push_back(VarId::q(i));
  }
  // Ring axioms.
  for (int i = 0; i < 300; ++i, ++cases) {
    Poly a = random_poly(mixed, 4, 3), b = random_poly(mixed, 4, 3), c = random_poly(mixed, 4, 3);
    bad += a * b != b * a || (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c || a + b - b != a ||
           a - a != Poly();
  }
  // Braid relations of divided differences.
  for (int i = 0; i < 200; ++i, ++cases) {
    Poly p = random_poly(xs, 5, 4);
    auto d = [](const Poly& f, int k) { return divided_difference(f, k, Family::X); };
    bad += !d(d(p, 1), 1).is_zero() || d(d(p, 1), 3) != d(d(p, 3), 1) ||
           d(d(d(p, 1), 2), 1) != d(d(d(p, 2), 1), 2) || d(d(d(p, 3), 4), 3) != d(d(d(p, 4), 3), 4);
  }
  // Text and JSON round trips.
  for (int i = 0; i < 200; ++i, ++cases) {
    Poly p = random_poly(mixed, 6, 4);
    bad += parse_poly(to_string(p)) != p || poly_from_json(to_json(p)) != p;
  }
  // Elementary and block round trips.
  for (int i = 0; i < 100; ++i, ++cases) {
    const int n = 2 + i % 3;
    const auto perms = all_permutations(n + 1);
    const Poly s = classical_schubert(perms[rng() % perms.size()]);
    bad += substitute(elementary_to_c(expand_elementary(s, n)), c_to_elementary(n)) != s;
  }
  for (int i = 0; i < 100; ++i, ++cases) {
    const FlagShape nn = i % 2 ? FlagShape({2}, 4) : FlagShape({1, 3}, 4);
    std::vector<VarId> gens;
    for (int j = 1; j <= nn.m() + 1; ++j)
      for (int k = 1; k <= nn.bound(j) - nn.bound(j - 1); ++k) gens.push_back(VarId::sigma(k, j));
    gens.push_back(VarId::t(1));
    Poly sig = random_poly(gens, 4, 3);
    bad += block_rewrite(block_expand(sig, nn), nn) != sig;
  }
  // Schubert basis round trips.
  for (int i = 0; i < 60; ++i, ++cases) {
    const int N = 3 + i % 3;
    const auto perms = all_permutations(N);
    std::map<Permutation, Poly> want;
    for (int k = 0; k < 3; ++k) {
      Poly c = random_poly({VarId::t(1), VarId::t(2), VarId::q(1)}, 2, 2);
      if (!c.is_zero()) want[perms[rng() % perms.size()].trimmed()] += c;
    }
    std::erase_if(want, [](const auto& kv) { return kv.second.is_zero(); });
    Poly p;
    for (auto& [w, c] : want) p += c * quantum_schubert(w);
    bad += expand_in_basis(p, N).terms != want;
  }
  // Homogeneity of every Sch^q_w on the shapes under test.
  for (auto nn : {FlagShape::complete(3), FlagShape::complete(4), FlagShape({2}, 3), FlagShape({1, 3}, 4),
                  FlagShape::complete(5), FlagShape({2}, 5)}) {
    for (auto& w : shape_reps(nn)) {
      ++cases;
      bad += graded_degree(eq_quantum_schubert(w, nn).body_x, nn.grading()) != w.length();
    }
  }
  return {bad == 0 && cases >= kMinPropertyCases,
          std::to_string(cases) + " randomized/exhaustive cases, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
  run(1, "Fl(3) polynomial table", kTable1Limit, table1);
  run(2, "Fl(3) product table", kTable2Limit, table2);
  run(3, "worked 231*231 expansion in window 5", kWorkedLimit, worked_expansion);
  run(4, "presentation relations", kPresentationLimit, presentation);
  run(5, "oracle equivalence on S_4", kOracleLimit, oracle);
  run(6, "straightening identities", kStraighteningLimit, straightening);
  run(7, "Graham positivity", kPositivityLimit, positivity);
  run(8, "stability in windows 3, 4, 5", kStabilityLimit, stability);
  run(9, "associativity", kAssociativityLimit, associativity);
  run(10, "property suites", 600.0, properties);
  std::printf("undocumented failures: %d\n", undocumented_failures);
  return undocumented_failures == 0 ? 0 : 1;
}
