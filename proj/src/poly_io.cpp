#include <cctype>
#include <json.hpp>

#include "eqschubert/errors.hpp"
#include "eqschubert/poly.hpp"

namespace eqschubert {

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  m.for_each([&](VarId v, int e) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += '^' + std::to_string(e);
  });
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse_poly: " + what + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly sum;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      Poly t = term();
      sum = negative ? sum - t : sum + t;
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        return sum;
      }
    }
  }
  Poly term() {
    Poly p = factor();
    while (accept('*')) p *= factor();
    return p;
  }
  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }
  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_++;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Poly(VarId::parse(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    Integer mag = negative ? Integer(-t.coeff) : t.coeff;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(t.monomial);
    if (mono.empty()) {
      s += mag.str();
    } else if (mag == 1) {
      s += mono;
    } else {
      s += mag.str() + "*" + mono;
    }
  }
  return s;
}

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string to_json(const Poly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json term;
    if (t.coeff >= std::numeric_limits<std::int64_t>::min() && t.coeff <= std::numeric_limits<std::int64_t>::max()) {
      term["coeff"] = static_cast<std::int64_t>(t.coeff);
    } else {
      term["coeff"] = t.coeff.str();
    }
    nlohmann::ordered_json mono = nlohmann::ordered_json::object();
    t.monomial.for_each([&](VarId v, int e) { mono[v.name()] = e; });
    term["monomial"] = std::move(mono);
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json doc;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

Poly poly_from_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("poly_from_json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw ParseError("poly_from_json: expected {\"terms\": [...]}");
  }
  std::vector<Term> terms;
  for (const auto& term : doc["terms"]) {
    if (!term.contains("coeff") || !term.contains("monomial")) throw ParseError("poly_from_json: malformed term");
    const auto& c = term["coeff"];
    Integer coeff = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<std::int64_t>());
    Monomial m;
    for (const auto& [name, e] : term["monomial"].items()) {
      int ex = e.get<int>();
      if (ex <= 0) throw ParseError("poly_from_json: exponents must be positive");
      m.mul_power(VarId::parse(name), ex);
    }
    terms.push_back(Term{std::move(m), std::move(coeff)});
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace eqschubert
