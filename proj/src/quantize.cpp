#include "eqschubert/quantize.hpp"

#include "eqschubert/errors.hpp"
#include "eqschubert/memo.hpp"
#include "eqschubert/universal.hpp"

namespace eqschubert {

namespace {

Poly y_to_t(const Poly& p) {
  return substitute(p, [](VarId v) -> std::optional<Poly> {
    if (v.family() == Family::Y) return Poly(VarId::t(v.first()));
    return std::nullopt;
  });
}

Memo<Permutation, Poly>& quantum_cache() {
  static Memo<Permutation, Poly> cache;
  return cache;
}

Memo<std::string, Poly>& shape_cache() {
  static Memo<std::string, Poly> cache;
  return cache;
}

Memo<Permutation, Poly>& ct_cache() {
  static Memo<Permutation, Poly> cache;
  return cache;
}

std::vector<VarId> block_vars(const FlagShape& nn, int j) {
  return var_range(Family::X, nn.bound(j - 1) + 1, nn.bound(j));
}

}  // namespace

Poly quantum_specialize(const Poly& g_form, const FlagShape& nn) {
  return substitute(g_form, [&](VarId v) -> std::optional<Poly> {
    switch (v.family()) {
      case Family::Y:
        return Poly(VarId::t(v.first()));
      case Family::H:
        return Poly();
      case Family::G:
        for (int i = 1; i <= nn.m(); ++i) {
          if (v.first() == nn.bound(i - 1) + 1 && v.second() == nn.bound(i + 1) - nn.bound(i - 1) - 1) {
            const int sign = (nn.bound(i) - nn.bound(i - 1) + 1) % 2 == 0 ? 1 : -1;
            return sign * Poly(VarId::q(i));
          }
        }
        return Poly();
      default:
        return std::nullopt;
    }
  });
}

Poly quantum_elementary(int k, int l, const FlagShape& nn) {
  if (k < 0 || k > l) return Poly();
  return quantum_specialize(E_poly(k, l), nn);
}

Bindings c_to_quantum(int l_max, const FlagShape& nn) {
  Bindings b;
  for (int l = 1; l <= l_max; ++l)
    for (int k = 1; k <= l; ++k) b.emplace(VarId::c(k, l), quantum_elementary(k, l, nn));
  for (int i = 1; i <= l_max + 1; ++i) b.emplace(VarId::y(i), Poly(VarId::t(i)));
  return b;
}

EqQuantumSchubert eq_quantum_schubert(const Permutation& w, const FlagShape& nn) {
  if (!in_shape(w, nn)) throw NotInShape(w.str() + " is not in S^{" + nn.str() + "}");
  Poly body = shape_cache().get_or_compute(w.trimmed().str() + "|" + nn.str(), [&] {
    const int win = std::max(nn.n() - 1, 1);
    Poly c_form = univ_double_dd(w, win);
    Poly g_form = partial_restrict(substitute(c_form, c_to_g(win)), nn);
    return quantum_specialize(g_form, nn);
  });
  return EqQuantumSchubert{w.embed(nn.n()), nn, std::move(body), std::nullopt};
}

EqQuantumSchubert with_sigma(EqQuantumSchubert s) {
  s.body_sigma = block_rewrite(s.body_x, s.shape);
  return s;
}

Poly universal_ct(const Permutation& w) {
  const Permutation key = w.trimmed();
  return ct_cache().get_or_compute(key, [&] { return y_to_t(univ_double_dd(key, univ_window(key))); });
}

Poly quantum_schubert(const Permutation& w) {
  const Permutation key = w.trimmed();
  return quantum_cache().get_or_compute(key, [&] {
    const int win = univ_window(key);
    return substitute(universal_ct(key), c_to_quantum(win, FlagShape::complete(win + 1)));
  });
}

Poly block_rewrite(const Poly& p, const FlagShape& nn) {
  Poly current = p;
  for (int j = 1; j <= nn.m() + 1; ++j) {
    const auto vars = block_vars(nn, j);
    const int size = static_cast<int>(vars.size());
    std::vector<Poly> elem(size + 1);
    for (int i = 0; i <= size; ++i) elem[i] = elementary_symmetric(i, vars);
    auto in_block = [&](VarId v) {
      return v.family() == Family::X && v.first() > nn.bound(j - 1) && v.first() <= nn.bound(j);
    };
    PolyBuilder out;
    Poly rest = current;
    while (!rest.is_zero()) {
      // Leading block monomial: lex-largest exponent vector among the block.
      auto parts = rest.split(in_block);
      const Monomial* lead = nullptr;
      for (const auto& [m, c] : parts)
        if (!lead || lex_compare(m, *lead) > 0) lead = &m;
      std::vector<int> lambda(size, 0);
      for (int i = 0; i < size; ++i) lambda[i] = lead->exponent(vars[i]);
      for (int i = 0; i + 1 < size; ++i) {
        if (lambda[i] < lambda[i + 1]) {
          throw NotBlockSymmetric("not symmetric in block " + std::to_string(j) + " of " + nn.str());
        }
      }
      const Poly coeff = parts.at(*lead);
      Poly sym(1);
      Monomial sig;
      for (int i = 1; i <= size; ++i) {
        const int e = lambda[i - 1] - (i < size ? lambda[i] : 0);
        if (e == 0) continue;
        sym *= elem[i].pow(static_cast<unsigned>(e));
        sig.mul_power(VarId::sigma(i, j), e);
      }
      out.add_product(coeff, sig, 1);
      rest -= coeff * sym;
    }
    current = out.build();
  }
  return current;
}

Poly block_expand(const Poly& p, const FlagShape& nn) {
  return substitute(p, [&](VarId v) -> std::optional<Poly> {
    if (v.family() != Family::Sigma) return std::nullopt;
    if (v.second() > nn.m() + 1) throw Error("sigma block index out of range for " + nn.str());
    return elementary_symmetric(v.first(), block_vars(nn, v.second()));
  });
}

std::string to_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  auto var_tex = [](VarId v) -> std::string {
    const std::string a = std::to_string(v.first()), b = std::to_string(v.second());
    switch (v.family()) {
      case Family::X: return "x_{" + a + "}";
      case Family::T: return "t_{" + a + "}";
      case Family::Y: return "y_{" + a + "}";
      case Family::Q: return "q_{" + a + "}";
      case Family::Alpha: return "\\alpha_{" + a + "}";
      case Family::C: return "c_{" + a + "}(" + b + ")";
      case Family::D: return "d_{" + a + "}(" + b + ")";
      case Family::G: return "g_{" + a + "}[" + b + "]";
      case Family::H: return "h_{" + a + "}[" + b + "]";
      case Family::Sigma: return "\\sigma^{" + b + "}_{" + a + "}";
    }
    return "?";
  };
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    Integer mag = negative ? Integer(-t.coeff) : t.coeff;
    s += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono;
    t.monomial.for_each([&](VarId v, int e) {
      if (!mono.empty()) mono += "\\,";
      mono += var_tex(v);
      if (e != 1) mono += "^{" + std::to_string(e) + "}";
    });
    if (mono.empty()) {
      s += mag.str();
    } else {
      s += (mag == 1 ? "" : mag.str() + "\\,") + mono;
    }
  }
  return s;
}

}  // namespace eqschubert
