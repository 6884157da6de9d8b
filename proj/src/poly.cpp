#include "eqschubert/poly.hpp"

#include <algorithm>

#include "eqschubert/errors.hpp"

namespace eqschubert {

namespace {

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back(b[j]);
      if (negate_b) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Integer c = negate_b ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(long value) : Poly(Integer(value)) {}

Poly::Poly(const Integer& value) {
  if (value != 0) terms_.push_back(Term{Monomial{}, value});
}

Poly::Poly(VarId v) { terms_.push_back(Term{Monomial(v), 1}); }

Poly::Poly(const Monomial& m, const Integer& c) {
  if (c != 0) terms_.push_back(Term{m, c});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  sort_terms(terms);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

std::optional<Integer> Poly::constant_value() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 && terms_[0].monomial.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

Integer Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

std::set<VarId> Poly::variables() const {
  std::set<VarId> out;
  for (const auto& t : terms_) t.monomial.for_each([&](VarId v, int) { out.insert(v); });
  return out;
}

bool Poly::involves(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial.exponent(v) > 0; });
}

bool Poly::involves_family(Family f) const {
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < t.monomial.size(); ++k) {
      if (t.monomial.var(k).family() == f) return true;
    }
  }
  return false;
}

int Poly::degree_in(VarId v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(v));
  return d;
}

int Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().monomial.total_degree(); }

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].monomial.is_one()) return a.terms_[0].coeff * b;
  if (b.size() == 1 && b.terms_[0].monomial.is_one()) return b.terms_[0].coeff * a;
  PolyBuilder builder;
  builder.add_product(a, b);
  return builder.build();
}

Poly operator-(Poly a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

Poly operator*(const Integer& s, const Poly& p) {
  if (s == 0) return {};
  Poly out = p;
  for (auto& t : out.terms_) t.coeff *= s;
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1L), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::map<Monomial, Poly> Poly::split(const std::function<bool(VarId)>& select) const {
  std::map<Monomial, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    Monomial sel, rest;
    t.monomial.for_each([&](VarId v, int e) { (select(v) ? sel : rest).mul_power(v, e); });
    groups[sel].push_back(Term{rest, t.coeff});
  }
  std::map<Monomial, Poly> out;
  for (auto& [m, ts] : groups) out.emplace(m, Poly::from_terms(std::move(ts)));
  return out;
}

void PolyBuilder::add(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyBuilder::add(const Poly& p) {
  for (const auto& t : p.terms()) add(t.monomial, t.coeff);
}

void PolyBuilder::add_scaled(const Poly& p, const Integer& s) {
  if (s == 0) return;
  for (const auto& t : p.terms()) add(t.monomial, t.coeff * s);
}

void PolyBuilder::add_product(const Poly& a, const Poly& b) {
  acc_.reserve(acc_.size() + a.size() * b.size() / 2 + 1);
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) add(ta.monomial * tb.monomial, ta.coeff * tb.coeff);
  }
}

void PolyBuilder::add_product(const Poly& a, const Monomial& m, const Integer& c) {
  if (c == 0) return;
  for (const auto& ta : a.terms()) add(ta.monomial * m, ta.coeff * c);
}

Poly PolyBuilder::build() {
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_) {
    if (c != 0) terms.push_back(Term{m, std::move(c)});
  }
  acc_.clear();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  return Poly::from_terms(std::move(terms));
}

Poly arith(const Poly& a, const Poly& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return a + b;
    case ArithKind::Sub: return a - b;
    case ArithKind::Mul: return a * b;
  }
  return {};
}

Poly substitute(const Poly& p, const Bindings& bindings, Unmapped mode) {
  return substitute(p, [&](VarId v) -> std::optional<Poly> {
    auto it = bindings.find(v);
    if (it != bindings.end()) return it->second;
    if (mode == Unmapped::Reject) throw Error("substitute: no binding for " + v.name());
    return std::nullopt;
  });
}

Poly substitute(const Poly& p, const Resolver& resolve) {
  // Powers of each image are cached; monomials over unmapped variables are
  // carried through as a monomial factor.
  std::map<VarId, std::optional<Poly>> images;
  std::map<std::pair<VarId, int>, Poly> powers;
  auto power_of = [&](VarId v, int e) -> const Poly& {
    auto it = powers.find({v, e});
    if (it != powers.end()) return it->second;
    const Poly& base = *images[v];
    int have = 1;
    while (powers.count({v, have + 1})) ++have;
    if (!powers.count({v, 1})) powers.emplace(std::make_pair(v, 1), base);
    for (int k = have + 1; k <= e; ++k) powers.emplace(std::make_pair(v, k), powers.at({v, k - 1}) * base);
    return powers.at({v, e});
  };
  PolyBuilder out;
  for (const auto& t : p.terms()) {
    Monomial kept;
    Poly factor(t.coeff);
    for (std::size_t k = 0; k < t.monomial.size() && !factor.is_zero(); ++k) {
      VarId v = t.monomial.var(k);
      int e = t.monomial.exponent(k);
      auto it = images.find(v);
      if (it == images.end()) it = images.emplace(v, resolve(v)).first;
      if (!it->second) {
        kept.mul_power(v, e);
      } else {
        factor = factor * power_of(v, e);
      }
    }
    if (!factor.is_zero()) out.add_product(factor, kept, 1);
  }
  return out.build();
}

Poly swap_variables(const Poly& p, VarId a, VarId b) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    int ea = t.monomial.exponent(a), eb = t.monomial.exponent(b);
    Monomial m = t.monomial;
    m.mul_power(a, eb - ea);
    m.mul_power(b, ea - eb);
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Poly::from_terms(std::move(terms));
}

Poly exact_divide(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw NotDivisible("exact_divide: division by zero polynomial");
  const Term& lead = d.leading_term();
  PolyBuilder quotient;
  Poly rem = p;
  Monomial qm;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!divide(lt.monomial, lead.monomial, qm) || lt.coeff % lead.coeff != 0) {
      throw NotDivisible("exact_divide: nonzero remainder, leading term " + to_string(Poly(lt.monomial, lt.coeff)) +
                         " not divisible by " + to_string(Poly(lead.monomial, lead.coeff)));
    }
    Integer qc = lt.coeff / lead.coeff;
    Poly step(qm, qc);
    quotient.add(qm, qc);
    rem -= step * d;
  }
  return quotient.build();
}

Poly divided_difference(const Poly& p, int i, Family family) {
  if (i < 1) throw Error("divided_difference: index must be >= 1");
  if (family != Family::X && family != Family::Y && family != Family::T) {
    throw Error("divided_difference: family must be X, Y or T");
  }
  const VarId a(family, i), b(family, i + 1);
  // Per monomial: (a^p b^r - a^r b^p)/(a - b) = a^r b^r * h_{p-r-1}(a, b) for p > r.
  PolyBuilder out;
  for (const auto& t : p.terms()) {
    int ea = t.monomial.exponent(a), eb = t.monomial.exponent(b);
    if (ea == eb) continue;
    Monomial rest = t.monomial.without(a).without(b);
    const int lo = std::min(ea, eb), span = std::abs(ea - eb);
    const Integer c = ea > eb ? t.coeff : Integer(-t.coeff);
    for (int k = 0; k < span; ++k) {
      Monomial m = rest;
      m.mul_power(a, lo + span - 1 - k);
      m.mul_power(b, lo + k);
      out.add(m, c);
    }
  }
  return out.build();
}

std::vector<VarId> var_range(Family family, int first, int last) {
  std::vector<VarId> out;
  for (int i = first; i <= last; ++i) out.emplace_back(family, i);
  return out;
}

Poly elementary_symmetric(int k, const std::vector<VarId>& vars) {
  if (k < 0) throw Error("elementary_symmetric: negative degree");
  const int n = static_cast<int>(vars.size());
  if (k > n) return {};
  // Pascal recursion e_k(v_1..v_m) = e_k(v_1..v_{m-1}) + v_m e_{k-1}(v_1..v_{m-1}).
  std::vector<Poly> e(static_cast<std::size_t>(k) + 1);
  e[0] = Poly(1L);
  for (int m = 0; m < n; ++m) {
    for (int j = std::min(k, m + 1); j >= 1; --j) e[j] += e[j - 1] * Poly(vars[m]);
  }
  return e[k];
}

Poly complete_symmetric(int k, const std::vector<VarId>& vars) {
  if (k < 0) throw Error("complete_symmetric: negative degree");
  if (k == 0) return Poly(1L);
  if (vars.empty()) return {};
  // h_k(v_1..v_m) = h_k(v_1..v_{m-1}) + v_m h_{k-1}(v_1..v_m).
  std::vector<Poly> h(static_cast<std::size_t>(k) + 1);
  h[0] = Poly(1L);
  for (VarId v : vars) {
    for (int j = 1; j <= k; ++j) h[j] += Poly(v) * h[j - 1];
  }
  return h[k];
}

Poly alpha_rewrite(const Poly& p, int n) {
  return substitute(p, [n](VarId v) -> std::optional<Poly> {
    if (v.family() != Family::T) return std::nullopt;
    if (v.first() > n) throw Error("alpha_rewrite: " + v.name() + " outside t_1..t_" + std::to_string(n));
    Poly s;
    for (int j = v.first(); j <= n; ++j) s += Poly(VarId::alpha(j));
    return s;
  });
}

Poly alpha_unrewrite(const Poly& p, int n) {
  return substitute(p, [n](VarId v) -> std::optional<Poly> {
    if (v.family() != Family::Alpha) return std::nullopt;
    if (v.first() > n) throw Error("alpha_unrewrite: " + v.name() + " outside alpha_1..alpha_" + std::to_string(n));
    if (v.first() == n) return Poly(VarId::t(n));
    return Poly(VarId::t(v.first())) - Poly(VarId::t(v.first() + 1));
  });
}

int Grading::weight(VarId v) const {
  switch (v.family()) {
    case Family::X:
    case Family::T:
    case Family::Y:
    case Family::Alpha:
      return 1;
    case Family::Q: {
      auto i = static_cast<std::size_t>(v.first());
      return i <= q_weights.size() ? q_weights[i - 1] : 2;
    }
    case Family::C:
    case Family::D:
      return v.first();
    case Family::G:
    case Family::H:
      return v.second() + 1;
    case Family::Sigma:
      return v.first();
  }
  return 1;
}

std::optional<int> graded_degree(const Poly& p, const Grading& grading) {
  std::optional<int> deg;
  for (const auto& t : p.terms()) {
    int d = 0;
    t.monomial.for_each([&](VarId v, int e) { d += e * grading.weight(v); });
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

bool is_homogeneous(const Poly& p, const Grading& grading) {
  return p.is_zero() || graded_degree(p, grading).has_value();
}

}  // namespace eqschubert
