#include "eqschubert/schubert.hpp"

#include "eqschubert/errors.hpp"
#include "eqschubert/memo.hpp"

namespace eqschubert {

namespace {

Memo<Permutation, Poly>& classical_cache() {
  static Memo<Permutation, Poly> cache;
  return cache;
}

}  // namespace

Permutation from_lehmer_code(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size());
  std::vector<int> avail;
  for (int i = 1; i <= n; ++i) avail.push_back(i);
  std::vector<int> v;
  for (int i = 0; i < n; ++i) {
    if (code[i] < 0 || code[i] >= static_cast<int>(avail.size())) throw Error("invalid Lehmer code");
    v.push_back(avail[code[i]]);
    avail.erase(avail.begin() + code[i]);
  }
  return Permutation(std::move(v));
}

Poly classical_schubert(const Permutation& w) {
  const Permutation key = w.trimmed();
  if (auto hit = classical_cache().find(key)) return *hit;
  auto code = key.lehmer_code();
  std::size_t i = 0;
  while (i + 1 < code.size() && code[i] >= code[i + 1]) ++i;
  Poly result;
  if (i + 1 >= code.size()) {
    // Dominant: S_w = x^code.
    Monomial m;
    for (std::size_t k = 0; k < code.size(); ++k) m.mul_power(VarId::x(static_cast<int>(k) + 1), code[k]);
    result = Poly(m);
  } else {
    const int pos = static_cast<int>(i) + 1;
    result = divided_difference(classical_schubert(key.right_swap(pos)), pos, Family::X);
  }
  return classical_cache().insert(key, std::move(result));
}

Poly classical_schubert(const Permutation& w, int n) {
  if (!w.in_window(n)) throw Error(w.str() + " is not in S_" + std::to_string(n));
  return classical_schubert(w);
}

std::vector<std::pair<Permutation, Permutation>> reduced_factorizations(const Permutation& w, int n) {
  std::vector<std::pair<Permutation, Permutation>> out;
  const int lw = w.length();
  for (const auto& v : all_permutations(n)) {
    if (v.length() > lw) break;
    Permutation u = v * w.embed(n);
    if (u.length() + v.length() == lw) out.emplace_back(v, u);
  }
  return out;
}

Poly double_schubert(const Permutation& w, int n) {
  if (!w.in_window(n)) throw Error(w.str() + " is not in S_" + std::to_string(n));
  PolyBuilder b;
  for (const auto& [v, u] : reduced_factorizations(w, n)) {
    Bindings x_to_t;
    for (int i = 1; i <= n; ++i) x_to_t.emplace(VarId::x(i), Poly(VarId::t(i)));
    Poly sv = substitute(classical_schubert(v), x_to_t);
    b.add_scaled(classical_schubert(u) * sv, v.length() % 2 == 0 ? 1 : -1);
  }
  return b.build();
}

XCoefficients split_x(const Poly& p) {
  XCoefficients parts;
  std::map<Monomial, std::vector<Term>, LexLess> raw;
  for (const auto& t : p.terms()) {
    Monomial xs, rest;
    t.monomial.for_each([&](VarId v, int e) { (v.family() == Family::X ? xs : rest).mul_power(v, e); });
    raw[xs].push_back(Term{rest, t.coeff});
  }
  for (auto& [m, terms] : raw) parts.emplace(m, Poly::from_terms(std::move(terms)));
  return parts;
}

Poly join_x(const XCoefficients& parts) {
  PolyBuilder b;
  for (const auto& [m, c] : parts) b.add_product(c, m, 1);
  return b.build();
}

std::map<Permutation, Poly> classical_expand(const Poly& p, int n) {
  XCoefficients rest = split_x(p);
  std::map<Permutation, Poly> out;
  while (!rest.empty()) {
    auto it = rest.begin();
    const Monomial lead = it->first;
    const Poly coeff = it->second;
    std::vector<int> code(n, 0);
    bool ok = true;
    lead.for_each([&](VarId v, int e) {
      if (v.first() > n || e > n - v.first()) {
        ok = false;
      } else {
        code[v.first() - 1] = e;
      }
    });
    if (!ok) throw NotInSpan("monomial outside the staircase of S_" + std::to_string(n));
    Permutation w = from_lehmer_code(code);
    const Poly s = classical_schubert(w);
    for (const auto& t : s.terms()) {
      Poly& slot = rest[t.monomial];
      slot -= t.coeff * coeff;
      if (slot.is_zero()) rest.erase(t.monomial);
    }
    if (rest.count(lead)) throw NonzeroResidual("lex-leading monomial did not cancel");
    out.emplace(w.trimmed(), coeff);
  }
  return out;
}

}  // namespace eqschubert
