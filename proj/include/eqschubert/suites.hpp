#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eqschubert/qhmodule.hpp"

namespace eqschubert {

struct GoldenPolynomials {
  int n = 0;
  std::vector<std::pair<Permutation, Poly>> rows;
};

GoldenPolynomials load_golden_polynomials(const std::string& path);
/// Rows of a golden product table; `corrected` applies its "corrections" list.
StructureTable load_golden_products(const std::string& path, bool corrected);
/// The "corrections" list as (u, v, w, d) -> (printed, corrected).
struct GoldenCorrection {
  Permutation u, v, w;
  QDegree d;
  Poly printed, corrected;
  std::string reason;
};
std::vector<GoldenCorrection> load_golden_corrections(const std::string& path);

/// Row-by-row comparison; one failure line per mismatching row.
Report compare_polynomials(const GoldenPolynomials& golden);
Report compare_products(const StructureTable& golden, const StructureTable& computed);

Report suite_tables(const std::string& golden_dir);
/// complete(2), complete(3), complete(4) and (2) in C^3.
Report suite_presentation();
Report suite_straightening(int l_max = 4);
/// Full tables for n = 3, 4 and `samples` seeded random S_5 pairs.
Report suite_positivity(int samples = 100, std::uint64_t seed = 1);
/// Every S_3 triple and `samples` seeded random S_4 triples.
Report suite_associativity(int samples = 50, std::uint64_t seed = 1);
/// Sch^q_w for w in S_3 in windows 3, 4, 5.
Report suite_stability();

void merge_into(Report& total, const Report& part, const std::string& prefix = "");

}  // namespace eqschubert
