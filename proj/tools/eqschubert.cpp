#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "eqschubert/errors.hpp"
#include "eqschubert/qhmodule.hpp"
#include "eqschubert/quantize.hpp"
#include "eqschubert/suites.hpp"

using namespace eqschubert;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "text";
  std::string output;
  int n = 0;
  std::string shape;
  std::string w, u, v;
  std::string poly_file;
  int truncate_to = 0;
  std::string suite;
  std::string golden_dir = EQSCHUBERT_GOLDEN_DIR;
  int samples = -1;
  std::uint64_t seed = 1;
  int l_max = 4;
  unsigned workers = 0;
};

FlagShape resolve_shape(const Options& o) {
  if (!o.shape.empty()) return FlagShape::parse(o.shape);
  if (o.n < 1) throw ParseError("give -n or --shape");
  return FlagShape::complete(o.n);
}

Permutation resolve_perm(const std::string& text, int n) {
  if (text.empty()) throw ParseError("missing permutation");
  return Permutation::parse(text).embed(std::max(n, Permutation::parse(text).window()));
}

json product_json(const ProductTerms& terms, int n) {
  json out = json::array();
  for (const auto& [key, c] : terms)
    out.push_back({{"w", key.first.embed(n).str()}, {"d", key.second}, {"t_poly", to_string(c)}});
  return out;
}

std::string cache_path(int n) {
  const char* dir = std::getenv("EQSCHUBERT_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return (std::filesystem::path(dir) / ("table-n" + std::to_string(n) + ".json")).string();
}

StructureTable cached_table(int n, unsigned workers) {
  const std::string path = cache_path(n);
  if (!path.empty()) {
    std::ifstream in(path);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        return table_from_json(buf.str());
      } catch (const Error&) {
        std::cerr << "ignoring unreadable cache " << path << "\n";
      }
    }
  }
  StructureTable table = multiplication_table(n, workers);
  if (!path.empty()) {
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    std::ofstream(path) << table_to_json(table);
  }
  return table;
}

std::string run_giambelli(const Options& o) {
  const FlagShape nn = resolve_shape(o);
  auto s = eq_quantum_schubert(resolve_perm(o.w, nn.n()), nn);
  if (!nn.is_complete()) s = with_sigma(std::move(s));
  if (o.format == "json") {
    json doc{{"w", s.w.str()}, {"shape", nn.str()}, {"body_x", to_string(s.body_x)}};
    if (s.body_sigma) doc["body_sigma"] = to_string(*s.body_sigma);
    return doc.dump();
  }
  if (o.format == "latex") return to_latex(s.body_sigma ? *s.body_sigma : s.body_x);
  std::string out = to_string(s.body_x);
  if (s.body_sigma) out += "\n" + to_string(*s.body_sigma);
  return out;
}

std::string run_multiply(const Options& o) {
  if (o.n < 2) throw ParseError("multiply needs -n >= 2");
  const auto u = resolve_perm(o.u, o.n), v = resolve_perm(o.v, o.n);
  const auto terms = qproduct(u, v, o.n);
  if (o.format == "json") return json{{"n", o.n}, {"u", u.str()}, {"v", v.str()}, {"terms", product_json(terms, o.n)}}.dump();
  if (o.format == "latex") return product_to_latex(terms);
  return product_to_string(terms);
}

std::string run_table(const Options& o) {
  if (o.n < 2) throw ParseError("table needs -n >= 2");
  const auto table = cached_table(o.n, o.workers);
  if (o.format == "json") return table_to_json(table);
  if (o.format == "latex") return table_to_latex(table);
  std::string out;
  for (const auto& [u, v] : table.ordered_pairs())
    out += u.str() + " * " + v.str() + " = " + product_to_string(table.at(u, v)) + "\n";
  if (!out.empty()) out.pop_back();
  return out;
}

std::string run_expand(const Options& o) {
  std::ifstream in(o.poly_file);
  if (!in) throw ParseError("cannot read " + o.poly_file);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  const Poly p = first != std::string::npos && text[first] == '{' ? poly_from_json(text) : parse_poly(text);
  SchubertCombo combo = expand_in_basis(p, resolve_shape(o));
  if (o.truncate_to > 0) combo = truncate(combo, o.truncate_to);
  if (o.format == "json") {
    json terms = json::array();
    for (const auto& [w, c] : combo.terms) terms.push_back({{"w", w.embed(combo.window).str()}, {"coeff", to_string(c)}});
    return json{{"window", combo.window}, {"terms", terms}}.dump();
  }
  if (o.format == "latex") {
    std::string out;
    for (const auto& [w, c] : combo.terms) {
      out += (out.empty() ? "" : " + ") + std::string("(") + to_latex(c) + ")\\,\\mathfrak{S}^q_{" + w.embed(combo.window).str() + "}";
    }
    return out.empty() ? "0" : out;
  }
  return combo_to_string(combo);
}

int run_verify(const Options& o) {
  Report r;
  if (o.suite == "tables") {
    r = suite_tables(o.golden_dir);
    for (const auto& c : load_golden_corrections(o.golden_dir + "/table2.json")) {
      std::cout << "note: " << c.u.str() << " * " << c.v.str() << " coefficient of " << c.w.str() << " uses "
                << to_string(c.corrected) << " instead of the printed " << to_string(c.printed) << " (" << c.reason
                << ")\n";
    }
  } else if (o.suite == "presentation") {
    r = suite_presentation();
  } else if (o.suite == "straightening") {
    r = suite_straightening(o.l_max);
  } else if (o.suite == "positivity") {
    r = suite_positivity(o.samples < 0 ? 100 : o.samples, o.seed);
  } else if (o.suite == "associativity") {
    r = suite_associativity(o.samples < 0 ? 50 : o.samples, o.seed);
  } else if (o.suite == "stability") {
    r = suite_stability();
  }
  std::cout << "suite " << o.suite << ": " << r.checked << " checks, " << r.failures.size() << " failures\n";
  for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  return r.ok() ? 0 : 1;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw Error("cannot write " + o.output);
  out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant quantum Schubert polynomials and products"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("-o,--output", o.output, "Write output to a file");

  auto* giambelli = app.add_subcommand("giambelli", "Print Sch^q_w for a flag shape");
  giambelli->add_option("-n", o.n, "Complete flags in C^n");
  giambelli->add_option("--shape", o.shape, "Partial shape \"n1,n2;n\"");
  giambelli->add_option("-w", o.w, "Permutation")->required();

  auto* multiply = app.add_subcommand("multiply", "Equivariant quantum product in QH_T^* Fl(n)");
  multiply->add_option("-n", o.n, "n")->required();
  multiply->add_option("-u", o.u, "First permutation")->required();
  multiply->add_option("-v", o.v, "Second permutation")->required();

  auto* table = app.add_subcommand("table", "Full multiplication table of QH_T^* Fl(n)");
  table->add_option("-n", o.n, "n")->required();
  table->add_option("--workers", o.workers, "Worker threads (0 = hardware)");

  auto* expand = app.add_subcommand("expand", "Expand a polynomial in the Sch^q basis");
  expand->add_option("-n", o.n, "Window N");
  expand->add_option("--shape", o.shape, "Partial shape \"n1,n2;N\"");
  expand->add_option("--poly", o.poly_file, "File holding a polynomial (text or JSON)")->required();
  expand->add_option("--truncate", o.truncate_to, "Keep only w in S_m");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"tables", "presentation", "straightening", "positivity", "associativity", "stability"}));
  verify->add_option("--golden-dir", o.golden_dir, "Directory with table1.json and table2.json");
  verify->add_option("--samples", o.samples, "Random samples for positivity/associativity");
  verify->add_option("--seed", o.seed, "Sampling seed");
  verify->add_option("--lmax", o.l_max, "Largest level for straightening");

  for (auto* sub : {giambelli, multiply, table, expand, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(o);
    std::string text;
    if (giambelli->parsed()) text = run_giambelli(o);
    if (multiply->parsed()) text = run_multiply(o);
    if (table->parsed()) text = run_table(o);
    if (expand->parsed()) text = run_expand(o);
    emit(o, text);
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotInShape& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotInSpan& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
