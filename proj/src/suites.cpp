#include "eqschubert/suites.hpp"

#include <fstream>
#include <json.hpp>
#include <random>

#include "eqschubert/errors.hpp"
#include "eqschubert/quantize.hpp"

namespace eqschubert {

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Permutation perm(const nlohmann::json& j, int n) { return Permutation::parse(j.get<std::string>()).embed(n); }

std::pair<Permutation, Permutation> ordered(const Permutation& u, const Permutation& v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

}  // namespace

void merge_into(Report& total, const Report& part, const std::string& prefix) {
  total.checked += part.checked;
  for (const auto& f : part.failures) total.failures.push_back(prefix + f);
}

GoldenPolynomials load_golden_polynomials(const std::string& path) {
  const auto doc = read_json(path);
  GoldenPolynomials g{doc.at("n").get<int>(), {}};
  for (const auto& row : doc.at("rows")) {
    g.rows.emplace_back(perm(row.at("w"), g.n), parse_poly(row.at("poly").get<std::string>()));
  }
  return g;
}

std::vector<GoldenCorrection> load_golden_corrections(const std::string& path) {
  const auto doc = read_json(path);
  const int n = doc.at("n").get<int>();
  const StructureTable printed = load_golden_products(path, false);
  std::vector<GoldenCorrection> out;
  if (!doc.contains("corrections")) return out;
  for (const auto& c : doc.at("corrections")) {
    GoldenCorrection g{perm(c.at("u"), n), perm(c.at("v"), n), perm(c.at("w"), n), c.at("d").get<QDegree>(),
                       Poly(), parse_poly(c.at("t_poly").get<std::string>()), c.value("reason", "")};
    const auto& row = printed.at(g.u, g.v);
    auto it = row.find({g.w, g.d});
    if (it != row.end()) g.printed = it->second;
    out.push_back(std::move(g));
  }
  return out;
}

StructureTable load_golden_products(const std::string& path, bool corrected) {
  const auto doc = read_json(path);
  StructureTable table{doc.at("n").get<int>(), {}};
  for (const auto& entry : doc.at("entries")) {
    ProductTerms terms;
    for (const auto& t : entry.at("terms")) {
      terms[{perm(t.at("w"), table.n), t.at("d").get<QDegree>()}] += parse_poly(t.at("t_poly").get<std::string>());
    }
    table.entries.emplace(ordered(perm(entry.at("u"), table.n), perm(entry.at("v"), table.n)), std::move(terms));
  }
  if (corrected && doc.contains("corrections")) {
    for (const auto& c : doc.at("corrections")) {
      auto& row = table.entries.at(ordered(perm(c.at("u"), table.n), perm(c.at("v"), table.n)));
      row[{perm(c.at("w"), table.n), c.at("d").get<QDegree>()}] = parse_poly(c.at("t_poly").get<std::string>());
    }
  }
  return table;
}

Report compare_polynomials(const GoldenPolynomials& golden) {
  Report r;
  const auto nn = FlagShape::complete(golden.n);
  for (const auto& [w, poly] : golden.rows) {
    ++r.checked;
    const Poly got = eq_quantum_schubert(w, nn).body_x;
    if (got != poly) r.failures.push_back(w.str() + ": computed " + to_string(got) + ", expected " + to_string(poly));
  }
  return r;
}

Report compare_products(const StructureTable& golden, const StructureTable& computed) {
  Report r;
  for (const auto& [key, want] : golden.entries) {
    ++r.checked;
    const auto& got = computed.at(key.first, key.second);
    if (got != want) {
      r.failures.push_back(key.first.str() + " * " + key.second.str() + ": computed " + product_to_string(got) +
                           ", expected " + product_to_string(want));
    }
  }
  return r;
}

Report suite_tables(const std::string& golden_dir) {
  Report r;
  merge_into(r, compare_polynomials(load_golden_polynomials(golden_dir + "/table1.json")), "polynomials: ");
  const auto golden = load_golden_products(golden_dir + "/table2.json", true);
  merge_into(r, compare_products(golden, multiplication_table(golden.n)), "products: ");
  return r;
}

Report suite_presentation() {
  Report r;
  for (const auto& nn : {FlagShape::complete(2), FlagShape::complete(3), FlagShape::complete(4), FlagShape({2}, 3)})
    merge_into(r, verify_presentation(nn), nn.str() + ": ");
  return r;
}

Report suite_straightening(int l_max) { return verify_straightening(l_max); }

Report suite_positivity(int samples, std::uint64_t seed) {
  Report r;
  for (int n : {3, 4}) merge_into(r, graham_check(multiplication_table(n)), "n=" + std::to_string(n) + ": ");
  std::mt19937_64 rng(seed);
  const auto perms = all_permutations(5);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (int i = 0; i < samples; ++i) {
    const auto& u = perms[pick(rng)];
    const auto& v = perms[pick(rng)];
    merge_into(r, graham_check(qproduct(u, v, 5), 5, u.str() + "*" + v.str()), "n=5: ");
  }
  return r;
}

Report suite_associativity(int samples, std::uint64_t seed) {
  Report r;
  merge_into(r, verify_associativity(multiplication_table(3)), "n=3: ");
  const auto table = multiplication_table(4);
  const auto perms = all_permutations(4);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  std::vector<std::tuple<Permutation, Permutation, Permutation>> triples;
  for (int i = 0; i < samples; ++i) triples.emplace_back(perms[pick(rng)], perms[pick(rng)], perms[pick(rng)]);
  merge_into(r, verify_associativity(table, triples), "n=4: ");
  return r;
}

Report suite_stability() {
  Report r;
  for (const auto& w : all_permutations(3)) {
    const Poly base = eq_quantum_schubert(w, FlagShape::complete(3)).body_x;
    for (int n = 4; n <= 5; ++n) {
      ++r.checked;
      const Poly other = eq_quantum_schubert(w, FlagShape::complete(n)).body_x;
      if (other != base) r.failures.push_back(w.str() + " differs in window " + std::to_string(n));
    }
  }
  return r;
}

}  // namespace eqschubert
