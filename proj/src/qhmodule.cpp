#include "eqschubert/qhmodule.hpp"

#include <algorithm>
#include <atomic>
#include <json.hpp>
#include <thread>
#include <tuple>

#include "eqschubert/errors.hpp"
#include "eqschubert/memo.hpp"
#include "eqschubert/quantize.hpp"
#include "eqschubert/schubert.hpp"
#include "eqschubert/universal.hpp"

namespace eqschubert {

namespace {

bool is_x(VarId v) { return v.family() == Family::X; }
bool is_c(VarId v) { return v.family() == Family::C; }
bool is_q(VarId v) { return v.family() == Family::Q; }

int x_degree(const Monomial& m) {
  int d = 0;
  m.for_each([&](VarId v, int e) {
    if (is_x(v)) d += e;
  });
  return d;
}

int c_degree(const Monomial& m) {
  int d = 0;
  m.for_each([&](VarId v, int e) {
    if (is_c(v)) d += v.first() * e;
  });
  return d;
}

Poly part_of_degree(const Poly& p, int d, int (*degree)(const Monomial&)) {
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (degree(t.monomial) == d) out.push_back(t);
  return Poly::from_terms(std::move(out));
}

int max_degree(const Poly& p, int (*degree)(const Monomial&)) {
  int d = -1;
  for (const auto& t : p.terms()) d = std::max(d, degree(t.monomial));
  return d;
}

void check_staircase(const Poly& p, int N) {
  for (const auto& t : p.terms()) {
    t.monomial.for_each([&](VarId v, int e) {
      if (is_x(v) && e > N - v.first()) {
        throw NotInSpan(v.name() + "^" + std::to_string(e) + " exceeds the staircase of window " + std::to_string(N));
      }
    });
  }
}

void add_to(std::map<Permutation, Poly>& terms, const Permutation& w, const Poly& a) {
  Poly& slot = terms[w];
  slot += a;
  if (slot.is_zero()) terms.erase(w);
}

// Shape (nn, n, n+1, ..., N-1) on C^N.
FlagShape extend_shape(const FlagShape& nn, int N) {
  std::vector<int> bounds = nn.bounds();
  for (int b = nn.n(); b < N; ++b) bounds.push_back(b);
  return FlagShape(std::move(bounds), N);
}

using StepKey = std::tuple<int, Monomial, int, int>;

Memo<StepKey, Poly>& step_cache() {
  static Memo<StepKey, Poly> cache;
  return cache;
}

Poly times_c(const Poly& f, int k, int l, int n);

// Standard monomial m (at most one c-factor per level below n) times c_k(l),
// brought back to standard form.
Poly step(const Monomial& m, int k, int l, int n) {
  if (k == 0) return Poly::from_terms({Term{m, 1}});
  if (k < 0 || k > l) return Poly();
  if (l > n) throw Error("straighten: c_" + std::to_string(k) + "(" + std::to_string(l) + ") above level " + std::to_string(n));
  if (l == n) return elementary_symmetric(k, var_range(Family::T, 1, n)) * Poly::from_terms({Term{m, 1}});
  return step_cache().get_or_compute({n, m, k, l}, [&]() -> Poly {
    int other = 0;
    m.for_each([&](VarId v, int) {
      if (is_c(v) && v.second() == l) other = v.first();
    });
    Monomial with = m;
    if (other == 0) {
      with.mul_power(VarId::c(k, l), 1);
      return Poly::from_terms({Term{with, 1}});
    }
    const int a = std::min(k, other), b = std::max(k, other);
    Monomial rest = m;
    rest.mul_power(VarId::c(other, l), -1);
    const Poly base = Poly::from_terms({Term{rest, 1}});
    const Poly q(VarId::q(l));
    // e_a(l) e_b(l) = e_b(l) e_a(l+1) + e_{b+1}(l) e_{a-1}(l) + q_l e_{b-1}(l-1) e_{a-1}(l)
    //               - e_{a-1}(l) e_{b+1}(l+1) - q_l e_{a-2}(l-1) e_b(l)
    Poly out = times_c(times_c(base, b, l, n), a, l + 1, n);
    out += times_c(times_c(base, b + 1, l, n), a - 1, l, n);
    out += q * times_c(times_c(base, a - 1, l, n), b - 1, l - 1, n);
    out -= times_c(times_c(base, a - 1, l, n), b + 1, l + 1, n);
    out -= q * times_c(times_c(base, b, l, n), a - 2, l - 1, n);
    return out;
  });
}

Poly times_c(const Poly& f, int k, int l, int n) {
  if (k == 0) return f;
  if (k < 0 || k > l) return Poly();
  PolyBuilder out;
  for (const auto& [cm, coeff] : f.split(is_c)) out.add_product(coeff, step(cm, k, l, n));
  return out.build();
}

// Standard form f times the c-monomial m.
Poly times_monomial(Poly f, const Monomial& m, int n) {
  m.for_each([&](VarId v, int e) {
    for (int i = 0; i < e; ++i) f = times_c(f, v.first(), v.second(), n);
  });
  return f;
}

Poly straighten_c(const Poly& p, int n) {
  PolyBuilder out;
  for (const auto& [cm, coeff] : p.split(is_c)) out.add_product(coeff, times_monomial(Poly(1), cm, n));
  return out.build();
}

Memo<std::string, ProductTerms>& product_cache() {
  static Memo<std::string, ProductTerms> cache;
  return cache;
}

Poly q_power(const QDegree& d) {
  Monomial m;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0) m.mul_power(VarId::q(static_cast<int>(i) + 1), d[i]);
  return Poly::from_terms({Term{m, 1}});
}

std::map<Permutation, Poly> contract(const StructureTable& table, const std::map<Permutation, Poly>& left,
                                     const Permutation& right) {
  std::map<Permutation, Poly> out;
  for (const auto& [x, coeff] : left)
    for (const auto& [key, c] : table.at(x, right)) add_to(out, key.first, coeff * c * q_power(key.second));
  return out;
}

std::string coeff_text(const Poly& c, const std::string& basis, bool latex) {
  const std::string body = latex ? to_latex(c) : to_string(c);
  if (c == Poly(1)) return basis;
  if (c.terms().size() == 1 && c.terms()[0].coeff == 1) return body + (latex ? "\\," : "*") + basis;
  return "(" + body + ")" + (latex ? "\\," : "*") + basis;
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i][0] == '-') {
      s += " - " + parts[i].substr(1);
    } else {
      s += " + " + parts[i];
    }
  }
  return s;
}

// Display order: longest w first, ties by one-line notation descending.
std::vector<std::pair<Permutation, Poly>> display_order(const std::map<Permutation, Poly>& m) {
  std::vector<std::pair<Permutation, Poly>> v(m.begin(), m.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.length() != b.first.length()) return a.first.length() > b.first.length();
    return b.first.one_line() < a.first.one_line();
  });
  return v;
}

std::string format_product(const ProductTerms& terms, bool latex) {
  std::vector<std::string> parts;
  const int n = terms.empty() ? 1 : static_cast<int>(terms.begin()->first.second.size()) + 1;
  for (const auto& [w, c] : display_order(collapse_q(terms))) {
    const std::string name = w.embed(n).str();
    const std::string basis = latex ? "\\sigma_{" + name + "}" : "s[" + name + "]";
    parts.push_back(coeff_text(c, basis, latex));
  }
  return join_terms(parts);
}

}  // namespace

const ProductTerms& StructureTable::at(const Permutation& u, const Permutation& v) const {
  auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  auto it = entries.find(key);
  if (it == entries.end()) throw Error("no table entry for " + u.str() + " * " + v.str());
  return it->second;
}

std::vector<std::pair<Permutation, Permutation>> StructureTable::ordered_pairs() const {
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const auto& [key, terms] : entries) out.push_back(key);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.length() + a.second.length() < b.first.length() + b.second.length();
  });
  return out;
}

Poly basis_polynomial(const Permutation& w, const FlagShape& nn) {
  if (nn.is_complete()) return quantum_schubert(w);
  return eq_quantum_schubert(w, nn).body_x;
}

SchubertCombo expand_in_basis(const Poly& p, int N) { return expand_in_basis(p, FlagShape::complete(N)); }

SchubertCombo expand_in_basis(const Poly& p, const FlagShape& nn) {
  const int N = nn.n();
  check_staircase(p, N);
  SchubertCombo combo{N, {}};
  Poly rest = p;
  while (!rest.is_zero()) {
    const int d = max_degree(rest, x_degree);
    for (const auto& [w, a] : classical_expand(part_of_degree(rest, d, x_degree), N)) {
      if (!in_shape(w, nn)) throw NotInSpan("component " + w.str() + " lies outside S^{" + nn.str() + "}");
      add_to(combo.terms, w, a);
      rest -= a * basis_polynomial(w, nn);
    }
    if (!rest.is_zero() && max_degree(rest, x_degree) >= d) {
      throw NonzeroResidual("x-degree " + std::to_string(d) + " part survived peeling");
    }
  }
  return combo;
}

SchubertCombo truncate(const SchubertCombo& combo, int n) { return truncate(combo, FlagShape::complete(n)); }

SchubertCombo truncate(const SchubertCombo& combo, const FlagShape& nn) {
  SchubertCombo out{nn.n(), {}};
  for (const auto& [w, a] : combo.terms) {
    if (!in_shape(w, nn)) continue;
    for (VarId v : a.variables()) {
      if ((v.family() == Family::T && v.first() > nn.n()) || (v.family() == Family::Q && v.first() > nn.m()) ||
          (v.family() != Family::T && v.family() != Family::Q)) {
        throw StrayVariables("coefficient of " + w.str() + " involves " + v.name());
      }
    }
    out.terms.emplace(w, a);
  }
  return out;
}

ProductTerms split_by_q(const SchubertCombo& combo, int n) {
  ProductTerms out;
  for (const auto& [w, a] : combo.terms) {
    for (const auto& [qm, c] : a.split(is_q)) {
      QDegree d(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
      qm.for_each([&](VarId v, int e) {
        if (v.first() > n - 1) throw StrayVariables("q-degree involves " + v.name());
        d[static_cast<std::size_t>(v.first() - 1)] = e;
      });
      out.emplace(std::make_pair(w, std::move(d)), c);
    }
  }
  return out;
}

Poly straighten(const Poly& p, int n) { return straighten_c(p, n); }

SchubertCombo expand_universal(const Poly& standard, int n) {
  SchubertCombo combo{n, {}};
  const Bindings to_x = c_to_elementary(std::max(n - 1, 1));
  Poly rest = standard;
  while (!rest.is_zero()) {
    const int d = max_degree(rest, c_degree);
    const Poly top = substitute(part_of_degree(rest, d, c_degree), to_x);
    for (const auto& [w, a] : classical_expand(top, n)) {
      add_to(combo.terms, w, a);
      rest -= a * universal_ct(w);
    }
    if (!rest.is_zero() && max_degree(rest, c_degree) >= d) {
      throw NonzeroResidual("c-degree " + std::to_string(d) + " part survived peeling");
    }
  }
  return combo;
}

ProductTerms qproduct(const Permutation& u, const Permutation& v, int n) {
  if (!u.in_window(n) || !v.in_window(n)) throw NotInShape(u.str() + " * " + v.str() + " not in S_" + std::to_string(n));
  const auto& [a, b] = u < v ? std::pair{u, v} : std::pair{v, u};
  return product_cache().get_or_compute(std::to_string(n) + "|" + a.str() + "|" + b.str(), [&] {
    const Poly left = straighten(universal_ct(a), n);
    PolyBuilder acc;
    for (const auto& [cm, coeff] : universal_ct(b).split(is_c)) acc.add_product(coeff, times_monomial(left, cm, n));
    const Poly standard = acc.build();
    return split_by_q(truncate(expand_universal(standard, n), n), n);
  });
}

ProductTerms qproduct_reference(const Permutation& u, const Permutation& v, int n) {
  if (!u.in_window(n) || !v.in_window(n)) throw NotInShape(u.str() + " * " + v.str() + " not in S_" + std::to_string(n));
  const Poly product = quantum_schubert(u) * quantum_schubert(v);
  return split_by_q(truncate(expand_in_basis(product, 2 * n - 1), n), n);
}

StructureTable multiplication_table(int n, unsigned workers) {
  if (n < 2) throw Error("multiplication_table needs n >= 2");
  const auto perms = all_permutations(n);
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = i; j < perms.size(); ++j) {
      const auto& [a, b] = perms[i] < perms[j] ? std::pair{perms[i], perms[j]} : std::pair{perms[j], perms[i]};
      pairs.emplace_back(a, b);
    }
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return x.first.length() + x.second.length() < y.first.length() + y.second.length();
  });
  std::vector<ProductTerms> results(pairs.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < pairs.size();) results[i] = qproduct(pairs[i].first, pairs[i].second, n);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  StructureTable table{n, {}};
  for (std::size_t i = 0; i < pairs.size(); ++i) table.entries.emplace(pairs[i], std::move(results[i]));
  return table;
}

Report graham_check(const ProductTerms& terms, int n, const std::string& label) {
  Report r;
  for (const auto& [key, c] : terms) {
    ++r.checked;
    const Poly a = alpha_rewrite(c, n);
    for (const auto& t : a.terms()) {
      const bool sign_ok = (t.monomial.total_degree() % 2 == 0) ? t.coeff > 0 : t.coeff < 0;
      const bool simple = t.monomial.exponent(VarId::alpha(n)) == 0;
      if (!sign_ok || !simple) {
        r.failures.push_back(label + " -> " + key.first.str() + ": " + to_string(c));
        break;
      }
    }
  }
  return r;
}

Report graham_check(const StructureTable& table) {
  Report r;
  for (const auto& [key, terms] : table.entries) {
    Report part = graham_check(terms, table.n, key.first.str() + "*" + key.second.str());
    r.checked += part.checked;
    r.failures.insert(r.failures.end(), part.failures.begin(), part.failures.end());
  }
  return r;
}

Report verify_presentation(const FlagShape& nn) {
  Report r;
  const int n = nn.n();
  const FlagShape big = extend_shape(nn, 2 * n - 1);
  const auto t = var_range(Family::T, 1, n);
  for (int k = 1; k <= n; ++k) {
    ++r.checked;
    const Poly rel = quantum_elementary(k, n, nn) - elementary_symmetric(k, t);
    try {
      const auto kept = truncate(expand_in_basis(rel, big), nn);
      if (!kept.terms.empty()) r.failures.push_back("k=" + std::to_string(k) + ": " + combo_to_string(kept));
    } catch (const Error& e) {
      r.failures.push_back("k=" + std::to_string(k) + ": " + e.what());
    }
  }
  return r;
}

Report verify_straightening(int l_max) {
  Report r;
  const FlagShape nn = FlagShape::complete(l_max + 1);
  auto e = [&](int k, int l) -> Poly {
    if (k == 0) return Poly(1);
    if (k < 0 || l < 0 || k > l) return Poly();
    return quantum_elementary(k, l, nn);
  };
  for (int l = 0; l <= l_max; ++l)
    for (int j = 0; j <= l; ++j)
      for (int k = 0; k <= l; ++k) {
        ++r.checked;
        const Poly q = l >= 1 ? Poly(VarId::q(l)) : Poly();
        const Poly lhs = e(j, l) * e(k + 1, l + 1) + e(j + 1, l) * e(k, l) + q * e(j - 1, l - 1) * e(k, l);
        const Poly rhs = e(k, l) * e(j + 1, l + 1) + e(k + 1, l) * e(j, l) + q * e(k - 1, l - 1) * e(j, l);
        if (lhs != rhs) {
          r.failures.push_back("(j,k,l)=(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) +
                               "): " + to_string(lhs - rhs));
        }
      }
  return r;
}

Report verify_associativity(const StructureTable& table,
                            const std::vector<std::tuple<Permutation, Permutation, Permutation>>& triples) {
  Report r;
  for (const auto& [u, v, w] : triples) {
    ++r.checked;
    const auto left = contract(table, collapse_q(table.at(u, v)), w);
    const auto right = contract(table, collapse_q(table.at(v, w)), u);
    if (left != right) r.failures.push_back("(" + u.str() + "," + v.str() + "," + w.str() + ")");
  }
  return r;
}

Report verify_associativity(const StructureTable& table) {
  std::vector<std::tuple<Permutation, Permutation, Permutation>> triples;
  const auto perms = all_permutations(table.n);
  for (const auto& u : perms)
    for (const auto& v : perms)
      for (const auto& w : perms) triples.emplace_back(u, v, w);
  return verify_associativity(table, triples);
}

std::map<Permutation, Poly> collapse_q(const ProductTerms& terms) {
  std::map<Permutation, Poly> out;
  for (const auto& [key, c] : terms) add_to(out, key.first, c * q_power(key.second));
  return out;
}

std::string product_to_string(const ProductTerms& terms) { return format_product(terms, false); }
std::string product_to_latex(const ProductTerms& terms) { return format_product(terms, true); }

std::string combo_to_string(const SchubertCombo& combo) {
  std::vector<std::string> parts;
  for (const auto& [w, c] : display_order(combo.terms)) parts.push_back(coeff_text(c, "S[" + w.embed(std::max(combo.window, w.window())).str() + "]", false));
  return join_terms(parts);
}

std::string table_to_json(const StructureTable& table) {
  nlohmann::ordered_json doc;
  doc["n"] = table.n;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : table.ordered_pairs()) {
    nlohmann::ordered_json entry;
    entry["u"] = u.str();
    entry["v"] = v.str();
    entry["terms"] = nlohmann::ordered_json::array();
    for (const auto& [key, c] : table.at(u, v)) {
      nlohmann::ordered_json term;
      term["w"] = key.first.embed(table.n).str();
      term["d"] = key.second;
      term["t_poly"] = to_string(c);
      entry["terms"].push_back(std::move(term));
    }
    doc["entries"].push_back(std::move(entry));
  }
  return doc.dump();
}

StructureTable table_from_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
    StructureTable table{doc.at("n").get<int>(), {}};
    for (const auto& entry : doc.at("entries")) {
      auto u = Permutation::parse(entry.at("u").get<std::string>()).embed(table.n);
      auto v = Permutation::parse(entry.at("v").get<std::string>()).embed(table.n);
      ProductTerms terms;
      for (const auto& term : entry.at("terms")) {
        auto w = Permutation::parse(term.at("w").get<std::string>()).embed(table.n);
        auto d = term.at("d").get<QDegree>();
        if (static_cast<int>(d.size()) != table.n - 1) throw ParseError("table_from_json: q-degree length mismatch");
        terms.emplace(std::make_pair(w, std::move(d)), parse_poly(term.at("t_poly").get<std::string>()));
      }
      table.entries.emplace(u < v ? std::make_pair(u, v) : std::make_pair(v, u), std::move(terms));
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table_from_json: ") + e.what());
  }
}

std::string table_to_latex(const StructureTable& table) {
  std::string s = "\\begin{array}{|l|l|l|} \\hline\n u & v & \\sigma_u \\circ \\sigma_v \\\\ \\hline\\hline\n";
  for (const auto& [u, v] : table.ordered_pairs()) {
    if (u.length() == 0 || v.length() == 0) continue;
    s += u.str() + " & " + v.str() + " & " + product_to_latex(table.at(u, v)) + " \\\\ \\hline\n";
  }
  return s + "\\end{array}\n";
}

}  // namespace eqschubert
