#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace homalg {

// Coefficient ring of every computation. Integer data is stored as rationals
// with unit denominator; algorithms that need the lattice structure work on
// the numerators.
enum class Ring { integers, rationals };

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

inline bool is_integral(const Scalar& x) { return x.get_den() == 1; }

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

inline std::string to_string(const Scalar& x) { return x.get_str(); }

std::string_view to_string(Ring ring);

// Accepts "Z", "Q", "integers", "rationals" (case-sensitive short forms).
Ring parse_ring(std::string_view text);

Vector zero_vector(std::size_t n);

Vector unit_vector(std::size_t n, std::size_t i);

bool is_zero(const Vector& v);

}  // namespace homalg
