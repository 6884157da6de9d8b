#include "eqschubert/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace eqschubert {

Monomial::Monomial(std::initializer_list<std::pair<VarId, int>> factors) {
  for (auto [v, e] : factors) mul_power(v, e);
}

Monomial::Monomial(VarId v, int exponent) { mul_power(v, exponent); }

int Monomial::exponent(VarId v) const {
  const std::uint64_t lo = static_cast<std::uint64_t>(v.key()) << 32;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), lo);
  if (it != entries_.end() && (*it >> 32) == v.key()) return static_cast<int>(*it & 0xffffffffu);
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : entries_) d += static_cast<int>(e & 0xffffffffu);
  return d;
}

void Monomial::mul_power(VarId v, int e) {
  if (e == 0) return;
  const std::uint64_t lo = static_cast<std::uint64_t>(v.key()) << 32;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), lo);
  if (it != entries_.end() && (*it >> 32) == v.key()) {
    int ne = static_cast<int>(*it & 0xffffffffu) + e;
    assert(ne >= 0);
    if (ne == 0) {
      entries_.erase(it);
    } else {
      *it = pack(v, ne);
    }
    return;
  }
  assert(e > 0);
  entries_.insert(it, pack(v, e));
}

Monomial Monomial::without(VarId v) const {
  Monomial m;
  for (auto e : entries_) {
    if ((e >> 32) != v.key()) m.entries_.push_back(e);
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.entries_.reserve(a.entries_.size() + b.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < a.entries_.size() && j < b.entries_.size()) {
    auto ka = a.entries_[i] >> 32, kb = b.entries_[j] >> 32;
    if (ka < kb) {
      m.entries_.push_back(a.entries_[i++]);
    } else if (kb < ka) {
      m.entries_.push_back(b.entries_[j++]);
    } else {
      m.entries_.push_back(a.entries_[i] + (b.entries_[j] & 0xffffffffu));
      ++i;
      ++j;
    }
  }
  for (; i < a.entries_.size(); ++i) m.entries_.push_back(a.entries_[i]);
  for (; j < b.entries_.size(); ++j) m.entries_.push_back(b.entries_[j]);
  return m;
}

bool divide(const Monomial& a, const Monomial& b, Monomial& out) {
  out.entries_.clear();
  std::size_t i = 0, j = 0;
  while (j < b.entries_.size()) {
    if (i == a.entries_.size()) return false;
    auto ka = a.entries_[i] >> 32, kb = b.entries_[j] >> 32;
    if (ka < kb) {
      out.entries_.push_back(a.entries_[i++]);
    } else if (kb < ka) {
      return false;
    } else {
      auto ea = a.entries_[i] & 0xffffffffu, eb = b.entries_[j] & 0xffffffffu;
      if (ea < eb) return false;
      if (ea > eb) out.entries_.push_back((a.entries_[i] & ~std::uint64_t{0xffffffffu}) | (ea - eb));
      ++i;
      ++j;
    }
  }
  for (; i < a.entries_.size(); ++i) out.entries_.push_back(a.entries_[i]);
  return true;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    auto va = a.var(k).key(), vb = b.var(k).key();
    // The monomial holding the earlier variable has the larger exponent there.
    if (va != vb) return va < vb ? std::strong_ordering::greater : std::strong_ordering::less;
    int ea = a.exponent(k), eb = b.exponent(k);
    if (ea != eb) return ea <=> eb;
  }
  return a.size() <=> b.size();
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da <=> db;
  return lex_compare(a, b);
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto e : entries_) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace eqschubert
