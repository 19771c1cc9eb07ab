#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "isotemporal/errors.hpp"

namespace isotemporal {

// Counts grow like 2^(n-1); everything here is arbitrary precision.
using ExactCount = boost::multiprecision::cpp_int;

ExactCount totient(std::uint64_t d);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Rotation-only orbit count of even-cardinality nonempty subsets of Z_n
// (the footprints an n-gon admits, with left/right reflections kept apart).
ExactCount footprint_count(int n);  // n >= 3

// Dihedral classes of footprints possessing a mirror-symmetric labeling,
// counted exactly from axis-rooted representatives. Errors: OddInput.
ExactCount mirror_footprint_count(int n);  // even n >= 4

// Dihedral classes of ±-forms with at least one skewed rotational fold.
// Errors: OddInput.
ExactCount skewed_rotational_form_count(int n);  // even n >= 4

// Number of isotemporal classes of the n-gon.
ExactCount isotemporal_class_count(int n);  // n >= 3

// Binary necklaces of length n (rotation only): (1/n) sum phi(d) 2^(n/d).
// The sum is divisible by n; that is asserted, not assumed.
ExactCount binary_necklace_count(std::uint64_t n);  // n >= 1

}  // namespace isotemporal
