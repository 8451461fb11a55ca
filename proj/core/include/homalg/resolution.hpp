#pragma once

#include <optional>
#include <vector>

#include "homalg/complex_of_reps.hpp"

namespace homalg {

// P_k sits in degree -k; blocks are indecomposable projectives named after
// their vertex.
struct ProjectiveResolution {
  ComplexOfReps complex;
  RepMorphism augmentation;  // term(0) -> V
  std::size_t length = 0;    // index of the last nonzero term
};

// Covers V by one projective per generator of V(x) modulo the images of
// lower stalks, then iterates on the kernel. max_len defaults to the number
// of vertices + 2; exceeding it throws ResolutionError.
ProjectiveResolution projective_resolution(const Representation& v, std::optional<std::size_t> max_len = {});

// Resolution V -> I^0 -> I^1 -> ... by closure representations I_x (the
// indecomposable injectives), with I^k in degree k and blocks named "I(x)".
// Obtained by dualizing a projective resolution over the opposite poset.
struct InjectiveResolution {
  ComplexOfReps complex;
  RepMorphism coaugmentation;  // V -> term(0)
  std::size_t length = 0;
};

InjectiveResolution injective_resolution(const Representation& v, std::optional<std::size_t> max_len = {});

struct ExtGroup {
  std::size_t betti = 0;
  std::vector<Scalar> torsion;
  bool is_zero() const { return betti == 0 && torsion.empty(); }
};

// H^q Hom(P, W) for q = 0..qmax.
std::vector<ExtGroup> ext_groups(const ProjectiveResolution& p, const RepresentationPtr& w, int qmax);
ExtGroup ext(const Representation& v, const Representation& w, int q);

}  // namespace homalg
