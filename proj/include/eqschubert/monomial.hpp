#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>

#include "eqschubert/var.hpp"

namespace eqschubert {

/// A power product of variables. Entries are kept sorted by variable and
/// never carry a zero exponent; the empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::pair<VarId, int>> factors);
  explicit Monomial(VarId v, int exponent = 1);

  bool is_one() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  VarId var(std::size_t k) const { return VarId::from_key(static_cast<std::uint32_t>(entries_[k] >> 32)); }
  int exponent(std::size_t k) const { return static_cast<int>(entries_[k] & 0xffffffffu); }
  int exponent(VarId v) const;

  int total_degree() const;

  /// Multiply in v^e (e may be negative as long as the result stays >= 0).
  void mul_power(VarId v, int e);
  Monomial without(VarId v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Monomial quotient, or false if b does not divide a.
  friend bool divide(const Monomial& a, const Monomial& b, Monomial& out);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }

  /// Graded lexicographic order: total degree first, then lex with earlier
  /// variables (in VarId order) more significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < entries_.size(); ++k) f(var(k), exponent(k));
  }

 private:
  static std::uint64_t pack(VarId v, int e) {
    return (static_cast<std::uint64_t>(v.key()) << 32) | static_cast<std::uint32_t>(e);
  }
  boost::container::small_vector<std::uint64_t, 4> entries_;
};

/// Plain lexicographic comparison ignoring total degree.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

}  // namespace eqschubert

template <>
struct std::hash<eqschubert::Monomial> {
  std::size_t operator()(const eqschubert::Monomial& m) const noexcept { return m.hash(); }
};
