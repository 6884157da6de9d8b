#include "eqschubert/var.hpp"

#include <cctype>
#include <charconv>

#include "eqschubert/errors.hpp"

namespace eqschubert {

namespace {

bool valid_indices(Family f, int a, int b) {
  if (a < 0 || b < 0 || a > VarId::kMaxIndex || b > VarId::kMaxIndex) return false;
  switch (f) {
    case Family::X:
    case Family::T:
    case Family::Y:
    case Family::Q:
    case Family::Alpha:
      return a >= 1 && b == 0;
    case Family::C:
    case Family::D:
      return a >= 1 && a <= b;  // c_k(l), 1 <= k <= l
    case Family::G:
    case Family::H:
      return a >= 1;  // g_i[j], j >= 0
    case Family::Sigma:
      return a >= 1 && b >= 1;
  }
  return false;
}

char prefix(Family f) {
  switch (f) {
    case Family::X: return 'x';
    case Family::T: return 't';
    case Family::Y: return 'y';
    case Family::Q: return 'q';
    case Family::C: return 'c';
    case Family::D: return 'd';
    case Family::G: return 'g';
    case Family::H: return 'h';
    case Family::Alpha: return 'a';
    case Family::Sigma: return 's';
  }
  return '?';
}

}  // namespace

VarId::VarId(Family f, int first, int second) {
  if (!valid_indices(f, first, second)) {
    throw Error("invalid variable indices (" + std::to_string(first) + "," + std::to_string(second) +
                ") for family '" + std::string(1, prefix(f)) + "'");
  }
  key_ = (static_cast<std::uint32_t>(f) << 28) | (static_cast<std::uint32_t>(first) << 14) |
         static_cast<std::uint32_t>(second);
}

std::string VarId::name() const {
  std::string s(1, prefix(family()));
  s += std::to_string(first());
  if (takes_two_indices(family())) {
    s += '_';
    s += std::to_string(second());
  }
  return s;
}

VarId VarId::parse(std::string_view name) {
  if (name.empty()) throw ParseError("empty variable name");
  Family f;
  switch (name[0]) {
    case 'x': f = Family::X; break;
    case 't': f = Family::T; break;
    case 'y': f = Family::Y; break;
    case 'q': f = Family::Q; break;
    case 'c': f = Family::C; break;
    case 'd': f = Family::D; break;
    case 'g': f = Family::G; break;
    case 'h': f = Family::H; break;
    case 'a': f = Family::Alpha; break;
    case 's': f = Family::Sigma; break;
    default: throw ParseError("unknown variable family in '" + std::string(name) + "'");
  }
  auto read_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw ParseError("bad index in variable '" + std::string(name) + "'");
    }
    return v;
  };
  std::string_view rest = name.substr(1);
  try {
    if (takes_two_indices(f)) {
      auto us = rest.find('_');
      if (us == std::string_view::npos) throw ParseError("variable '" + std::string(name) + "' needs two indices");
      return VarId(f, read_int(rest.substr(0, us)), read_int(rest.substr(us + 1)));
    }
    return VarId(f, read_int(rest));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace eqschubert
