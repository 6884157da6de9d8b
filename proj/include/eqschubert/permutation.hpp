#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqschubert/poly.hpp"

namespace eqschubert {

/// Permutation of {1..n} in one-line notation.
///
/// Points beyond the window are fixed, so permutations of different windows
/// compare equal when they agree after trimming trailing fixed points.
/// Composition is (v*w)(i) = v(w(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// Simple transposition s_i inside window n.
  static Permutation simple(int i, int n);
  /// w_o(i) = n + 1 - i.
  static Permutation longest(int n);
  /// Compact "231" (every value < 10) or separated "11,2,3" / "11 2 3".
  static Permutation parse(std::string_view text);

  int window() const { return static_cast<int>(v_.size()); }
  int operator()(int i) const { return i <= window() ? v_[i - 1] : i; }
  const std::vector<int>& one_line() const { return v_; }

  int length() const;
  std::vector<int> lehmer_code() const;
  /// Smallest window containing every moved point (at least 1).
  int support() const;

  Permutation embed(int n) const;
  Permutation trimmed() const { return embed(support()); }
  bool in_window(int n) const { return support() <= n; }

  Permutation inverse() const;
  /// s_i * w: exchanges the values i and i+1.
  Permutation left_swap(int i) const;
  /// w * s_i: exchanges the entries in positions i and i+1.
  Permutation right_swap(int i) const;

  /// #{i <= p : w(i) <= q}.
  int rank(int p, int q) const;

  std::string str() const;

  friend Permutation operator*(const Permutation& v, const Permutation& w);
  friend bool operator==(const Permutation& a, const Permutation& b);
  /// Length first, then one-line lexicographic on a common window.
  friend bool operator<(const Permutation& a, const Permutation& b);

 private:
  std::vector<int> v_;
};

inline int length(const Permutation& w) { return w.length(); }
inline std::vector<int> lehmer_code(const Permutation& w) { return w.lehmer_code(); }
inline Permutation compose(const Permutation& v, const Permutation& w) { return v * w; }
inline Permutation inverse(const Permutation& w) { return w.inverse(); }
inline int rank_fn(const Permutation& w, int p, int q) { return w.rank(p, q); }
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// All of S_n in (length, lex) order.
std::vector<Permutation> all_permutations(int n);

/// Partial flag shape 0 < n_1 < ... < n_m < n.
class FlagShape {
 public:
  FlagShape(std::vector<int> bounds, int n);
  static FlagShape complete(int n);
  /// "1,3;5" means bounds (1,3) inside n = 5; "3" alone means complete(3).
  static FlagShape parse(std::string_view text);

  int n() const { return n_; }
  int m() const { return static_cast<int>(bounds_.size()); }
  /// n_i with n_0 = 0 and n_{m+1} = n.
  int bound(int i) const;
  const std::vector<int>& bounds() const { return bounds_; }
  bool is_complete() const { return m() == n_ - 1; }
  bool contains(int p) const;

  /// deg q_i = n_{i+1} - n_{i-1}.
  Grading grading() const;
  std::string str() const;

  friend bool operator==(const FlagShape&, const FlagShape&) = default;

 private:
  std::vector<int> bounds_;
  int n_;
};

/// Minimal coset representatives S^nn: permutations of S_n whose descents
/// all lie in nn.
std::vector<Permutation> shape_reps(const FlagShape& nn);
bool in_shape(const Permutation& w, const FlagShape& nn);
/// Sorts each block of positions n_{i-1}+1..n_i ascending.
Permutation min_coset_rep(const Permutation& w, const FlagShape& nn);
/// Longest element of S^nn.
Permutation longest_element(const FlagShape& nn);
/// min_coset_rep(w_o * w); throws NotInShape when w is not in S^nn.
Permutation dual(const Permutation& w, const FlagShape& nn);

/// alpha_{k,l} = s_{n_l-k+1} ... s_{n_l}, for 1 <= k <= n_l.
Permutation cyclic_alpha(int k, int l, const FlagShape& nn);
/// beta_{k,l} = s_{n_l+k-1} ... s_{n_l}, for 1 <= k <= n - n_l.
Permutation cyclic_beta(int k, int l, const FlagShape& nn);

/// Indices i_1..i_k with w = w_o s_{i_1} ... s_{i_k}, each prefix product
/// one shorter than the last.
std::vector<int> descent_chain(const Permutation& w, int n);

}  // namespace eqschubert

template <>
struct std::hash<eqschubert::Permutation> {
  std::size_t operator()(const eqschubert::Permutation& w) const noexcept {
    std::size_t h = 0;
    for (int x : w.trimmed().one_line()) h = h * 131 + static_cast<std::size_t>(x);
    return h;
  }
};
