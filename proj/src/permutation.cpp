#include "eqschubert/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "eqschubert/errors.hpp"

namespace eqschubert {

Permutation::Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
  std::vector<bool> seen(v_.size() + 1, false);
  for (int x : v_) {
    if (x < 1 || x > window() || seen[x]) throw Error("not a permutation of 1.." + std::to_string(window()));
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw Error("simple transposition s_" + std::to_string(i) + " outside S_" + std::to_string(n));
  return identity(n).right_swap(i);
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  try {
    if (separated) {
      std::size_t pos = 0;
      while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) ++pos;
        if (pos == text.size()) break;
        int x = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), x);
        if (ec != std::errc()) throw ParseError("bad permutation '" + std::string(text) + "'");
        v.push_back(x);
        pos = static_cast<std::size_t>(ptr - text.data());
      }
    } else {
      for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad permutation '" + std::string(text) + "'");
        v.push_back(c - '0');
      }
    }
    if (v.empty()) throw ParseError("empty permutation");
    return Permutation(std::move(v));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < window(); ++i)
    for (int j = i + 1; j < window(); ++j) inv += v_[i] > v_[j];
  return inv;
}

std::vector<int> Permutation::lehmer_code() const {
  std::vector<int> code(v_.size(), 0);
  for (int i = 0; i < window(); ++i)
    for (int j = i + 1; j < window(); ++j) code[i] += v_[j] < v_[i];
  return code;
}

int Permutation::support() const {
  int s = window();
  while (s > 1 && v_[s - 1] == s) --s;
  return std::max(s, 1);
}

Permutation Permutation::embed(int n) const {
  if (n < support()) throw Error("cannot restrict " + str() + " to window " + std::to_string(n));
  Permutation w;
  w.v_.resize(n);
  for (int i = 1; i <= n; ++i) w.v_[i - 1] = (*this)(i);
  return w;
}

Permutation Permutation::inverse() const {
  Permutation w;
  w.v_.resize(v_.size());
  for (int i = 0; i < window(); ++i) w.v_[v_[i] - 1] = i + 1;
  return w;
}

Permutation Permutation::left_swap(int i) const {
  Permutation w = embed(std::max(window(), i + 1));
  for (int& x : w.v_) {
    if (x == i) {
      x = i + 1;
    } else if (x == i + 1) {
      x = i;
    }
  }
  return w;
}

Permutation Permutation::right_swap(int i) const {
  Permutation w = embed(std::max(window(), i + 1));
  std::swap(w.v_[i - 1], w.v_[i]);
  return w;
}

int Permutation::rank(int p, int q) const {
  int r = 0;
  for (int i = 1; i <= p; ++i) r += (*this)(i) <= q;
  return r;
}

std::string Permutation::str() const {
  const bool compact = std::all_of(v_.begin(), v_.end(), [](int x) { return x < 10; });
  std::string s;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!compact && i > 0) s += ',';
    s += std::to_string(v_[i]);
  }
  return s;
}

Permutation operator*(const Permutation& v, const Permutation& w) {
  const int n = std::max(v.window(), w.window());
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = v(w(i));
  return Permutation(std::move(out));
}

bool operator==(const Permutation& a, const Permutation& b) {
  const int n = std::max(a.window(), b.window());
  for (int i = 1; i <= n; ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool operator<(const Permutation& a, const Permutation& b) {
  int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  const int n = std::max(a.window(), b.window());
  for (int i = 1; i <= n; ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  const int n = std::max(v.window(), w.window());
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q)
      if (v.rank(p, q) < w.rank(p, q)) return false;
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  std::stable_sort(out.begin(), out.end());
  return out;
}

FlagShape::FlagShape(std::vector<int> bounds, int n) : bounds_(std::move(bounds)), n_(n) {
  if (n < 1) throw Error("flag shape needs n >= 1");
  int prev = 0;
  for (int b : bounds_) {
    if (b <= prev || b >= n) throw Error("flag shape bounds must satisfy 0 < n_1 < ... < n_m < n");
    prev = b;
  }
}

FlagShape FlagShape::complete(int n) {
  std::vector<int> b(std::max(n - 1, 0));
  std::iota(b.begin(), b.end(), 1);
  return FlagShape(std::move(b), n);
}

FlagShape FlagShape::parse(std::string_view text) {
  auto read_int = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("bad flag shape '" + std::string(text) + "'");
    }
    return v;
  };
  try {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) return complete(read_int(text));
    std::vector<int> bounds;
    std::string_view head = text.substr(0, semi);
    while (!head.empty()) {
      auto comma = head.find(',');
      bounds.push_back(read_int(head.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      head.remove_prefix(comma + 1);
    }
    return FlagShape(std::move(bounds), read_int(text.substr(semi + 1)));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

int FlagShape::bound(int i) const {
  if (i <= 0) return 0;
  if (i > m()) return n_;
  return bounds_[i - 1];
}

bool FlagShape::contains(int p) const { return std::binary_search(bounds_.begin(), bounds_.end(), p); }

Grading FlagShape::grading() const {
  Grading g;
  for (int i = 1; i <= m(); ++i) g.q_weights.push_back(bound(i + 1) - bound(i - 1));
  return g;
}

std::string FlagShape::str() const {
  std::string s;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(bounds_[i]);
  }
  return s + ";" + std::to_string(n_);
}

bool in_shape(const Permutation& w, const FlagShape& nn) {
  if (!w.in_window(nn.n())) return false;
  for (int i = 1; i < nn.n(); ++i)
    if (w(i) > w(i + 1) && !nn.contains(i)) return false;
  return true;
}

std::vector<Permutation> shape_reps(const FlagShape& nn) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(nn.n()))
    if (in_shape(w, nn)) out.push_back(w);
  return out;
}

Permutation min_coset_rep(const Permutation& w, const FlagShape& nn) {
  std::vector<int> v = w.embed(std::max(w.support(), nn.n())).one_line();
  for (int i = 0; i <= nn.m(); ++i) std::sort(v.begin() + nn.bound(i), v.begin() + nn.bound(i + 1));
  return Permutation(std::move(v));
}

Permutation longest_element(const FlagShape& nn) { return min_coset_rep(Permutation::longest(nn.n()), nn); }

Permutation dual(const Permutation& w, const FlagShape& nn) {
  if (!in_shape(w, nn)) throw NotInShape(w.str() + " is not in S^{" + nn.str() + "}");
  return min_coset_rep(Permutation::longest(nn.n()) * w.embed(nn.n()), nn);
}

namespace {

Permutation product_of_simples(const std::vector<int>& word, int n) {
  Permutation w = Permutation::identity(n);
  for (int i : word) w = w * Permutation::simple(i, n);
  return w;
}

}  // namespace

Permutation cyclic_alpha(int k, int l, const FlagShape& nn) {
  if (l < 1 || l > nn.m() || k < 1 || k > nn.bound(l)) {
    throw Error("alpha_{" + std::to_string(k) + "," + std::to_string(l) + "} out of range");
  }
  std::vector<int> word;
  for (int i = nn.bound(l) - k + 1; i <= nn.bound(l); ++i) word.push_back(i);
  return product_of_simples(word, nn.n());
}

Permutation cyclic_beta(int k, int l, const FlagShape& nn) {
  if (l < 1 || l > nn.m() || k < 1 || k > nn.n() - nn.bound(l)) {
    throw Error("beta_{" + std::to_string(k) + "," + std::to_string(l) + "} out of range");
  }
  std::vector<int> word;
  for (int i = nn.bound(l) + k - 1; i >= nn.bound(l); --i) word.push_back(i);
  return product_of_simples(word, nn.n());
}

std::vector<int> descent_chain(const Permutation& w, int n) {
  Permutation cur = w.embed(n);
  std::vector<int> up;
  for (;;) {
    int i = 1;
    while (i < n && cur(i) > cur(i + 1)) ++i;
    if (i >= n) break;
    cur = cur.right_swap(i);
    up.push_back(i);
  }
  std::reverse(up.begin(), up.end());
  return up;
}

}  // namespace eqschubert
