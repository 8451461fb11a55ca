#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "homalg/chain_complex.hpp"
#include "homalg/dg_morphism.hpp"

// Property suites shared by the unit tests and the acceptance driver. Each
// returns the number of cases examined and a message per failure.
namespace properties {

struct Result {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && cases > 0; }
  void merge(const Result& r);
};

using NamedAlgebra = std::pair<std::string, homalg::DgAlgebraPtr>;
using NamedComplex = std::pair<std::string, homalg::ChainComplex>;

// D = U M V, det U = det V = +-1, diagonal shape and divisibility chain,
// product of factors = |det M| for nonsingular square M.
Result smith_invariants(std::size_t count, unsigned seed);

// Every dg algebra built by the model scenarios: End algebras, the
// subalgebra, ideal quotient and formal algebra of the n-point chain for
// n = 2..max_n, and the de Rham models for n = 2..10.
std::vector<NamedAlgebra> scenario_algebras(int max_n);

// d^2 = 0 and the Leibniz rule on every basis pair.
Result dg_axioms(const std::vector<NamedAlgebra>& algebras);

// Underlying complexes of the algebras, stalk complexes of the model
// resolutions and random integer complexes.
std::vector<NamedComplex> scenario_complexes(const std::vector<NamedAlgebra>& algebras, unsigned seed);

// sum (-1)^q rank C^q = sum (-1)^q betti H^q over Q.
Result euler_identity(const std::vector<NamedComplex>& complexes);

// End(J[k]) agrees with End(J) for the trivial resolution, k = -2..2, under
// the label-preserving map f -> (-1)^{k |f|} f.
Result end_shift_invariance();

// Betti numbers of every integer scenario agree with the same computation
// over the rationals.
Result ring_agreement(int max_n);

}  // namespace properties
