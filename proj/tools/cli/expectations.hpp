#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homalg/scalar.hpp"

namespace homalg::cli {

// One signed differential row: d(element) = sum coeff * label, all in the
// given degree of the source element.
struct DifferentialRow {
  int degree;
  std::string element;
  std::vector<std::pair<std::string, int>> image;
};

using DegreeRanks = std::map<int, std::size_t>;

// Two-point model, constant sheaf resolved in degrees 0..2.
DegreeRanks trivial_end_ranks();
DegreeRanks trivial_cohomology();
std::vector<DifferentialRow> trivial_differential_rows();

// Two-point model, constant sheaf plus one skyscraper, degrees -1..1.
DegreeRanks one_point_end_ranks();
DegreeRanks one_point_cohomology();
DegreeRanks one_point_kernel_ranks();
DegreeRanks one_point_image_ranks();
std::vector<DifferentialRow> one_point_differential_rows();

// n-point model.
DegreeRanks n_point_end_ranks(int n);
DegreeRanks n_point_cohomology(int n);
DegreeRanks n_point_subalgebra_ranks(int n);
DegreeRanks n_point_ideal_ranks(int n);

// Finite de Rham matrix model.
constexpr std::size_t de_rham_dimension = 9;
constexpr std::size_t de_rham_cohomology_dimension = 5;
// cohomology dimension per matrix entry
std::map<std::pair<int, int>, std::size_t> de_rham_cohomology_by_entry();

// Nonzero Hom(I_S, I_T) between closure representations of the n-point
// model; every listed space has rank one.
std::vector<std::pair<std::string, std::string>> n_point_hom_list(int n);

}  // namespace homalg::cli
