#pragma once

#include <set>
#include <vector>

#include "isotemporal/cycle_forms.hpp"

namespace isotemporal {

// Detected symmetries of a ±-form. Axes are named by the smaller of the two
// crossed indices for even n; for odd n a reflection crosses one edge and one
// vertex and is recorded under both names.
struct SymmetryProfile {
  std::vector<int> mirror_edge_axes;
  std::vector<int> skewed_mirror_edge_axes;
  std::vector<int> skewed_mirror_vertex_axes;
  std::vector<int> rotational_folds;         // d > 1, d | n
  std::vector<int> skewed_rotational_folds;  // d > 1, d | n
  bool negation_isomorphic = false;

  bool has_mirror() const { return !mirror_edge_axes.empty(); }
  bool has_skewed_mirror() const {
    return !skewed_mirror_edge_axes.empty() || !skewed_mirror_vertex_axes.empty();
  }
  bool has_rotational() const { return !rotational_folds.empty(); }
  bool has_skewed_rotational() const { return !skewed_rotational_folds.empty(); }

  // Order of the stabilizer of the form in the dihedral group: rotations
  // fixing the form plus label-preserving reflections (= mirror axes).
  int stabilizer_order(int n) const;

  friend bool operator==(const SymmetryProfile&, const SymmetryProfile&) = default;
};

SymmetryProfile detect_symmetries(const PmForm& p);

// Vertex axes through v_i with f(e_{i-a}) = f(e_{i+a-1}) for all a.
// Always empty for valid forms; exposed so that claim is testable.
std::vector<int> mirror_vertex_axes(const PmForm& p);

// All d | n, d > 1, with the position set invariant under rotation by n/d.
std::set<int> footprint_rotational_folds(const Footprint& fp);

// True iff some reflection fixes the position set.
bool footprint_has_reflection(const Footprint& fp);

// True iff some dihedral transform of p equals negate(p). Decided by brute
// force over the 2n maps, independently of the symmetry-axis criteria.
bool is_negation_isomorphic(const PmForm& p);

}  // namespace isotemporal
