#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace eqschubert {

/// Variable families, listed in canonical order.
///
/// X, T, Y, Q and Alpha take one index (x_i, t_i, y_i, q_i, alpha_i).
/// C and D take (k, l) for c_k(l), d_k(l); G and H take (i, j) for g_i[j],
/// h_i[j]; Sigma takes (i, j) for the block elementary sigma_i^j.
enum class Family : std::uint8_t { X = 0, T, Y, Q, C, D, G, H, Alpha, Sigma };

constexpr bool takes_two_indices(Family f) {
  return f == Family::C || f == Family::D || f == Family::G || f == Family::H ||
         f == Family::Sigma;
}

/// A typed polynomial variable, packed into 32 bits so that integer order
/// equals (family, first index, second index) order.
class VarId {
 public:
  static constexpr int kMaxIndex = (1 << 14) - 1;

  VarId() = default;
  VarId(Family f, int first, int second = 0);

  static VarId x(int i) { return {Family::X, i}; }
  static VarId t(int i) { return {Family::T, i}; }
  static VarId y(int i) { return {Family::Y, i}; }
  static VarId q(int i) { return {Family::Q, i}; }
  static VarId alpha(int i) { return {Family::Alpha, i}; }
  static VarId c(int k, int l) { return {Family::C, k, l}; }
  static VarId d(int k, int l) { return {Family::D, k, l}; }
  static VarId g(int i, int j) { return {Family::G, i, j}; }
  static VarId h(int i, int j) { return {Family::H, i, j}; }
  static VarId sigma(int i, int j) { return {Family::Sigma, i, j}; }

  static VarId from_key(std::uint32_t key) {
    VarId v;
    v.key_ = key;
    return v;
  }

  Family family() const { return static_cast<Family>(key_ >> 28); }
  int first() const { return static_cast<int>((key_ >> 14) & kMaxIndex); }
  int second() const { return static_cast<int>(key_ & kMaxIndex); }
  std::uint32_t key() const { return key_; }

  /// Canonical name: x3, t1, q2, a1, c2_3, g1_2, s1_2 ...
  std::string name() const;
  /// Inverse of name(); throws ParseError.
  static VarId parse(std::string_view name);

  friend auto operator<=>(VarId a, VarId b) = default;

 private:
  std::uint32_t key_ = 0;
};

}  // namespace eqschubert

template <>
struct std::hash<eqschubert::VarId> {
  std::size_t operator()(eqschubert::VarId v) const noexcept { return v.key(); }
};
