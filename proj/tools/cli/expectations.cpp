#include "cli/expectations.hpp"

namespace homalg::cli {

namespace {

std::string idx(int j, int i) {
  if (j < 10 && i < 10) return "{" + std::to_string(j) + std::to_string(i) + "}";
  return "{" + std::to_string(j) + "," + std::to_string(i) + "}";
}

std::string he(int j, int i) { return "he_" + idx(j, i); }
std::string hp(int j, int i) { return "hp_" + idx(j, i); }
std::string e(int j, int i) { return "e_" + idx(j, i); }

// rows shared by the trivial and one-point tables, with hemisphere/arc
// blocks one degree lower in the one-point case
std::vector<DifferentialRow> hemisphere_rows(int d) {
  return {
      {d, "h1", {{he(1, 1), 1}, {he(1, 2), 1}}},
      {d, "h2", {{he(2, 1), -1}, {he(2, 2), -1}}},
      {d, "e1", {{he(2, 1), 1}, {he(1, 1), -1}, {e(1, 1), 1}, {e(1, 2), -1}}},
      {d, "e2", {{he(2, 2), 1}, {he(1, 2), -1}, {e(2, 2), 1}, {e(2, 1), -1}}},
      {d + 1, he(1, 1), {{hp(1, 1), 1}, {hp(1, 2), -1}}},
      {d + 1, he(1, 2), {{hp(1, 2), 1}, {hp(1, 1), -1}}},
      {d + 1, he(2, 1), {{hp(2, 1), 1}, {hp(2, 2), -1}}},
      {d + 1, he(2, 2), {{hp(2, 2), 1}, {hp(2, 1), -1}}},
      {d + 1, e(1, 1), {{hp(1, 1), 1}, {hp(2, 1), -1}}},
      {d + 1, e(1, 2), {{hp(1, 2), 1}, {hp(2, 2), -1}}},
      {d + 1, e(2, 1), {{hp(1, 1), 1}, {hp(2, 1), -1}}},
      {d + 1, e(2, 2), {{hp(1, 2), 1}, {hp(2, 2), -1}}},
      {d + 2, hp(1, 1), {}},
      {d + 2, hp(1, 2), {}},
      {d + 2, hp(2, 1), {}},
      {d + 2, hp(2, 2), {}},
  };
}

}  // namespace

DegreeRanks trivial_end_ranks() { return {{0, 6}, {1, 8}, {2, 4}}; }
DegreeRanks trivial_cohomology() { return {{0, 1}, {1, 0}, {2, 1}}; }

std::vector<DifferentialRow> trivial_differential_rows() {
  auto rows = hemisphere_rows(0);
  rows.push_back({0, "p1", {{e(2, 1), 1}, {e(1, 1), -1}}});
  rows.push_back({0, "p2", {{e(1, 2), 1}, {e(2, 2), -1}}});
  return rows;
}

DegreeRanks one_point_end_ranks() { return {{-1, 1}, {0, 9}, {1, 11}, {2, 4}}; }
DegreeRanks one_point_cohomology() { return {{-1, 0}, {0, 2}, {1, 2}, {2, 1}}; }
DegreeRanks one_point_kernel_ranks() { return {{0, 3}, {1, 8}, {2, 4}}; }
DegreeRanks one_point_image_ranks() { return {{0, 6}, {1, 3}}; }

std::vector<DifferentialRow> one_point_differential_rows() {
  auto rows = hemisphere_rows(0);
  rows.push_back({-1, "p1", {{e(1, 1), 1}, {e(2, 1), -1}}});
  rows.push_back({0, "p1^{(0)}", {}});
  rows.push_back({0, "p1^{(1)}", {{e(2, 1), 1}, {e(1, 1), -1}}});
  rows.push_back({0, "p2", {{e(1, 2), 1}, {e(2, 2), -1}}});
  rows.push_back({0, e(1, 1), {{hp(2, 1), 1}, {hp(1, 1), -1}}});
  rows.push_back({0, e(2, 1), {{hp(2, 1), 1}, {hp(1, 1), -1}}});
  rows.push_back({1, hp(1, 1), {}});
  rows.push_back({1, hp(2, 1), {}});
  rows.push_back({1, "p1", {}});
  return rows;
}

DegreeRanks n_point_end_ranks(int n) {
  const std::size_t k = static_cast<std::size_t>(n);
  return {{-1, k}, {0, 5 * k + 2}, {1, 7 * k}, {2, 2 * k}};
}

DegreeRanks n_point_cohomology(int n) {
  const std::size_t k = static_cast<std::size_t>(n);
  return {{-1, 0}, {0, k + 1}, {1, 2 * k}, {2, 1}};
}

DegreeRanks n_point_subalgebra_ranks(int n) {
  const std::size_t k = static_cast<std::size_t>(n);
  return {{-1, 0}, {0, 2 * k + 3}, {1, 5 * k + 1}, {2, 2 * k}};
}

DegreeRanks n_point_ideal_ranks(int n) {
  const std::size_t k = static_cast<std::size_t>(n);
  return {{-1, 0}, {0, 0}, {1, k - 1}, {2, k - 1}};
}

std::map<std::pair<int, int>, std::size_t> de_rham_cohomology_by_entry() {
  return {{{1, 1}, 2}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 1}};
}

std::vector<std::pair<std::string, std::string>> n_point_hom_list(int n) {
  auto s = [](char c, int i) { return std::string(1, c) + std::to_string(i); };
  std::vector<std::pair<std::string, std::string>> out;
  for (int j = 1; j <= 2; ++j) {
    out.emplace_back(s('H', j), s('H', j));
    for (int i = 1; i <= n; ++i) out.emplace_back(s('H', j), s('E', i));
    for (int i = 1; i <= n; ++i) out.emplace_back(s('H', j), s('P', i));
  }
  for (int i = 1; i <= n; ++i) {
    out.emplace_back(s('E', i), s('E', i));
    out.emplace_back(s('E', i), s('P', i));
    out.emplace_back(s('E', i), s('P', i == 1 ? n : i - 1));
    out.emplace_back(s('P', i), s('P', i));
  }
  return out;
}

}  // namespace homalg::cli
