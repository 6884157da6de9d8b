#include "eqschubert/universal.hpp"

#include <memory>
#include <mutex>
#include <tuple>

#include "eqschubert/errors.hpp"
#include "eqschubert/memo.hpp"
#include "eqschubert/schubert.hpp"

namespace eqschubert {

namespace {

Poly c_var(int k, int l) {
  if (k == 0) return Poly(1);
  if (k < 0 || k > l) return Poly();
  return Poly(VarId::c(k, l));
}

// Univariate polynomial in T with polynomial coefficients.
using TPoly = std::vector<Poly>;

TPoly tmul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void tadd(TPoly& a, const TPoly& b, int sign) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
}

// Cofactor expansion along the first column; rows are indices into m.
TPoly tdet(const std::vector<std::vector<TPoly>>& m, std::vector<int> rows, int col) {
  if (rows.empty()) return {Poly(1)};
  TPoly total;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const TPoly& entry = m[rows[r]][col];
    bool zero = true;
    for (const auto& c : entry) zero = zero && c.is_zero();
    if (zero) continue;
    std::vector<int> minor = rows;
    minor.erase(minor.begin() + static_cast<long>(r));
    tadd(total, tmul(entry, tdet(m, minor, col + 1)), r % 2 == 0 ? 1 : -1);
  }
  return total;
}

Poly det(const std::vector<std::vector<Poly>>& m) {
  std::vector<std::vector<TPoly>> tm(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& e : m[i]) tm[i].push_back({e});
  std::vector<int> rows(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) rows[i] = static_cast<int>(i);
  TPoly d = tdet(tm, rows, 0);
  return d.empty() ? Poly() : d[0];
}

Memo<std::pair<int, int>, Poly>& e_cache() {
  static Memo<std::pair<int, int>, Poly> cache;
  return cache;
}

Memo<std::pair<Permutation, int>, Poly>& dd_cache() {
  static Memo<std::pair<Permutation, int>, Poly> cache;
  return cache;
}

}  // namespace

Poly g_var(int i, int j) { return j == 0 ? Poly(VarId::x(i)) : Poly(VarId::g(i, j)); }

Poly E_poly(int k, int l) {
  if (k == 0) return Poly(1);
  if (k < 0 || k > l) return Poly();
  return e_cache().get_or_compute({k, l}, [&] {
    Poly sum = E_poly(k, l - 1);
    for (int j = 0; j <= k - 1; ++j) sum += E_poly(k - j - 1, l - j - 1) * g_var(l - j, j);
    return sum;
  });
}

Poly E_det_check(int k, int l) {
  if (l < 1) throw Error("E_det_check needs l >= 1");
  std::vector<std::vector<TPoly>> m(l, std::vector<TPoly>(l));
  for (int a = 1; a <= l; ++a) {
    for (int b = a; b <= l; ++b) m[a - 1][b - 1] = {g_var(a, b - a)};
    m[a - 1][a - 1].push_back(Poly(1));  // + T on the diagonal
    if (a < l) m[a][a - 1] = {Poly(-1)};
  }
  std::vector<int> rows(l);
  for (int i = 0; i < l; ++i) rows[i] = i;
  TPoly d = tdet(m, rows, 0);
  const int power = l - k;
  if (power < 0 || power >= static_cast<int>(d.size())) return Poly();
  return d[power];
}

Poly H_poly(int a, int b) {
  if (a < 1 || b < 1) throw Error("H_poly needs a, b >= 1");
  std::vector<std::vector<Poly>> m(a, std::vector<Poly>(a));
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= a; ++j) {
      int k = 1 + j - i, l = b + j - 1;
      m[i - 1][j - 1] = k == 0 ? Poly(1) : (k < 0 || k > l ? Poly() : E_poly(k, l));
    }
  return det(m);
}

Bindings c_to_g(int l_max) {
  Bindings b;
  for (int l = 1; l <= l_max; ++l)
    for (int k = 1; k <= l; ++k) b.emplace(VarId::c(k, l), E_poly(k, l));
  return b;
}

Bindings invert_E(int l_max) {
  Bindings g;
  auto lookup = [&](int i, int j) -> const Poly& { return g.at(j == 0 ? VarId::x(i) : VarId::g(i, j)); };
  for (int j = 0; j < l_max; ++j) {
    for (int i = 1; i + j <= l_max; ++i) {
      Poly v = c_var(j + 1, i + j) - c_var(j + 1, i + j - 1);
      for (int jj = 0; jj < j; ++jj) v -= c_var(j - jj, i + j - jj - 1) * lookup(i + j - jj, jj);
      g.emplace(j == 0 ? VarId::x(i) : VarId::g(i, j), std::move(v));
    }
  }
  return g;
}

Bindings c_to_elementary(int l_max, Family target) {
  Bindings b;
  for (int l = 1; l <= l_max; ++l) {
    auto vars = var_range(target, 1, l);
    for (int k = 1; k <= l; ++k) b.emplace(VarId::c(k, l), elementary_symmetric(k, vars));
  }
  return b;
}

namespace {

// Inverse of the integer matrix taking standard elementary products of one
// degree to staircase monomials of that degree.
struct ElementaryBlock {
  std::vector<std::vector<int>> seqs;
  std::map<Monomial, int> rows;
  std::vector<std::vector<Integer>> inverse;  // seqs x rows
};

ElementaryBlock build_block(int n, int degree) {
  ElementaryBlock blk;
  std::vector<int> k(n, 0);
  for (;;) {
    int sum = 0;
    for (int v : k) sum += v;
    if (sum == degree) blk.seqs.push_back(k);
    int pos = 0;
    while (pos < n && k[pos] == pos + 1) k[pos++] = 0;
    if (pos == n) break;
    ++k[pos];
  }
  std::vector<Poly> cols;
  for (const auto& seq : blk.seqs) {
    Poly b(1);
    for (int l = 1; l <= n; ++l) b *= elementary_symmetric(seq[l - 1], var_range(Family::X, 1, l));
    for (const auto& t : b.terms()) blk.rows.emplace(t.monomial, 0);
    cols.push_back(std::move(b));
  }
  int r = 0;
  for (auto& [m, idx] : blk.rows) idx = r++;
  const int size = static_cast<int>(blk.seqs.size());
  if (r != size) throw Error("elementary products do not span the staircase");
  using Rational = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(2 * size));
  for (int c = 0; c < size; ++c)
    for (const auto& t : cols[c].terms()) a[blk.rows.at(t.monomial)][c] = Rational(t.coeff);
  for (int i = 0; i < size; ++i) a[i][size + i] = 1;
  // Gauss-Jordan on [M | I].
  for (int c = 0; c < size; ++c) {
    int piv = c;
    while (piv < size && a[piv][c] == 0) ++piv;
    if (piv == size) throw Error("elementary transition matrix is singular");
    std::swap(a[piv], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int i = 0; i < size; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j < 2 * size; ++j) a[i][j] -= f * a[c][j];
    }
  }
  blk.inverse.assign(size, std::vector<Integer>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      const Rational& x = a[i][size + j];
      if (denominator(x) != 1) throw Error("elementary transition matrix is not unimodular");
      blk.inverse[i][j] = numerator(x);
    }
  return blk;
}

const ElementaryBlock& elementary_block(int n, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ElementaryBlock>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, degree}];
  if (!slot) slot = std::make_unique<ElementaryBlock>(build_block(n, degree));
  return *slot;
}

}  // namespace

ElemExpansion expand_elementary(const Poly& p, int n) {
  XCoefficients parts = split_x(p);
  std::map<int, std::vector<std::pair<const Monomial*, const Poly*>>> by_degree;
  for (const auto& [m, c] : parts) {
    bool inside = true;
    m.for_each([&](VarId v, int e) { inside = inside && v.first() <= n && e <= n + 1 - v.first(); });
    if (!inside) throw NotInSpan("monomial outside the elementary span of level " + std::to_string(n));
    by_degree[m.total_degree()].emplace_back(&m, &c);
  }
  ElemExpansion out;
  for (const auto& [degree, entries] : by_degree) {
    const ElementaryBlock& blk = elementary_block(n, degree);
    for (std::size_t i = 0; i < blk.seqs.size(); ++i) {
      PolyBuilder coeff;
      for (const auto& [m, c] : entries) {
        const Integer& f = blk.inverse[i][blk.rows.at(*m)];
        if (f != 0) coeff.add_scaled(*c, f);
      }
      Poly a = coeff.build();
      if (!a.is_zero()) out.emplace(blk.seqs[i], std::move(a));
    }
  }
  return out;
}

Poly elementary_to_c(const ElemExpansion& e) {
  PolyBuilder b;
  for (const auto& [k, coeff] : e) {
    Poly m(1);
    for (std::size_t l = 0; l < k.size(); ++l) m *= c_var(k[l], static_cast<int>(l) + 1);
    b.add_product(coeff, m);
  }
  return b.build();
}

Poly univ_single(const Permutation& w, int n) {
  if (!w.in_window(n + 1)) throw Error(w.str() + " is not in S_" + std::to_string(n + 1));
  return elementary_to_c(expand_elementary(classical_schubert(w), n));
}

int univ_window(const Permutation& w) { return std::max(w.support() - 1, 1); }

Poly univ_double_dd(const Permutation& w, int n) {
  if (!w.in_window(n + 1)) throw Error(w.str() + " is not in S_" + std::to_string(n + 1));
  const Permutation key = w.embed(n + 1);
  if (auto hit = dd_cache().find({key, n})) return *hit;
  Poly result;
  if (key == Permutation::longest(n + 1)) {
    result = Poly(1);
    for (int i = 1; i <= n; ++i) {
      Poly factor;
      Poly y = -Poly(VarId::y(n + 1 - i));
      Poly ypow(1);
      for (int j = 0; j <= i; ++j) {
        factor += c_var(i - j, i) * ypow;
        ypow *= y;
      }
      result *= factor;
    }
  } else {
    // Some i has value i before i+1; then s_i w is one longer.
    const auto inv = key.inverse();
    int i = 1;
    while (inv(i) > inv(i + 1)) ++i;
    result = -divided_difference(univ_double_dd(key.left_swap(i), n), i, Family::Y);
  }
  return dd_cache().insert({key, n}, std::move(result));
}

Poly rename_c_to_d(const Poly& p) {
  return substitute(p, [](VarId v) -> std::optional<Poly> {
    if (v.family() == Family::C) return Poly(VarId::d(v.first(), v.second()));
    return std::nullopt;
  });
}

Poly univ_double_sum(const Permutation& w, int n) {
  if (!w.in_window(n + 1)) throw Error(w.str() + " is not in S_" + std::to_string(n + 1));
  PolyBuilder b;
  for (const auto& [v, u] : reduced_factorizations(w, n + 1)) {
    b.add_scaled(univ_single(u, n) * rename_c_to_d(univ_single(v, n)), v.length() % 2 == 0 ? 1 : -1);
  }
  return b.build();
}

Poly d_to_y(const Poly& p, int l_max) {
  Bindings b;
  for (int l = 1; l <= l_max; ++l) {
    auto ys = var_range(Family::Y, 1, l);
    for (int k = 1; k <= l; ++k) b.emplace(VarId::d(k, l), elementary_symmetric(k, ys));
  }
  return substitute(p, b);
}

Poly partial_restrict(const Poly& g_form, const FlagShape& nn) {
  return substitute(g_form, [&](VarId v) -> std::optional<Poly> {
    if (v.family() != Family::G) return std::nullopt;
    const int end = v.first() + v.second();
    if (end == nn.n() || nn.contains(end)) return std::nullopt;
    return Poly();
  });
}

Poly partial_restrict_via_c(const Poly& c_form, const FlagShape& nn) {
  Poly moved = substitute(c_form, [&](VarId v) -> std::optional<Poly> {
    if (v.family() != Family::C) return std::nullopt;
    int p = 0;
    while (p < nn.m() && nn.bound(p + 1) <= v.second()) ++p;
    return c_var(v.first(), nn.bound(p));
  });
  int l_max = 0;
  for (VarId v : moved.variables())
    if (v.family() == Family::C) l_max = std::max(l_max, v.second());
  return partial_restrict(substitute(moved, c_to_g(l_max)), nn);
}

}  // namespace eqschubert
