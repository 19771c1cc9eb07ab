#include "isotemporal/symmetry.hpp"

#include <algorithm>

namespace isotemporal {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// Edge axis through e_a (and e_{a+n/2} when n is even).
bool edge_axis_holds(const PmForm& p, int a, bool skew) {
  int n = p.size();
  for (int k = 0; k <= n / 2; ++k) {
    PmLabel lhs = p.at(a - k);
    PmLabel rhs = p.at(a + k);
    if (lhs != (skew ? negated(rhs) : rhs)) return false;
  }
  return true;
}

// Vertex axis through v_i (and v_{i+n/2} when n is even): pairs e_{i-a}
// with e_{i+a-1}.
bool vertex_axis_holds(const PmForm& p, int i, bool skew) {
  int n = p.size();
  for (int a = 1; a <= n / 2 + 1; ++a) {
    PmLabel lhs = p.at(i - a);
    PmLabel rhs = p.at(i + a - 1);
    if (lhs != (skew ? negated(rhs) : rhs)) return false;
  }
  return true;
}

std::vector<int> divisor_folds(const PmForm& p, bool skew) {
  int n = p.size();
  std::vector<int> folds;
  for (int d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      PmLabel rot = p.at(j + n / d);
      ok = p.label(j) == (skew ? negated(rot) : rot);
    }
    if (ok) folds.push_back(d);
  }
  return folds;
}

}  // namespace

int SymmetryProfile::stabilizer_order(int n) const {
  // Rotations fixing the form are multiples of n/t where t is the largest
  // fold; skewed axes and skewed folds move the form to its negation, so only
  // mirror axes contribute reflections.
  int t = rotational_folds.empty() ? 1 : *std::max_element(rotational_folds.begin(),
                                                           rotational_folds.end());
  (void)n;
  return t + static_cast<int>(mirror_edge_axes.size());
}

SymmetryProfile detect_symmetries(const PmForm& p) {
  int n = p.size();
  SymmetryProfile out;

  // For even n, axes a and a + n/2 are the same reflection; keep the smaller
  // name. For odd n, every reflection crosses one edge and one vertex.
  int edge_axis_limit = n % 2 == 0 ? n / 2 : n;
  for (int a = 0; a < edge_axis_limit; ++a) {
    if (edge_axis_holds(p, a, false)) out.mirror_edge_axes.push_back(a);
    if (edge_axis_holds(p, a, true)) out.skewed_mirror_edge_axes.push_back(a);
  }
  int vertex_axis_limit = n % 2 == 0 ? n / 2 : n;
  for (int i = 0; i < vertex_axis_limit; ++i) {
    if (vertex_axis_holds(p, i, true)) out.skewed_mirror_vertex_axes.push_back(i);
  }

  out.rotational_folds = divisor_folds(p, false);
  out.skewed_rotational_folds = divisor_folds(p, true);
  out.negation_isomorphic = is_negation_isomorphic(p);
  return out;
}

std::vector<int> mirror_vertex_axes(const PmForm& p) {
  int n = p.size();
  std::vector<int> out;
  int limit = n % 2 == 0 ? n / 2 : n;
  for (int i = 0; i < limit; ++i) {
    if (vertex_axis_holds(p, i, false)) out.push_back(i);
  }
  return out;
}

std::set<int> footprint_rotational_folds(const Footprint& fp) {
  int n = fp.size();
  std::set<int> folds;
  for (int d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int pos = 0; pos < n && ok; ++pos) {
      ok = fp.contains(pos) == fp.contains(mod(pos + n / d, n));
    }
    if (ok) folds.insert(d);
  }
  return folds;
}

bool footprint_has_reflection(const Footprint& fp) {
  int n = fp.size();
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int pos = 0; pos < n && ok; ++pos) {
      ok = fp.contains(pos) == fp.contains(mod(c - pos, n));
    }
    if (ok) return true;
  }
  return false;
}

bool is_negation_isomorphic(const PmForm& p) {
  PmForm neg = negate(p);
  for (int r = 0; r < p.size(); ++r) {
    for (bool refl : {false, true}) {
      if (dihedral_transform(p, r, refl) == neg) return true;
    }
  }
  return false;
}

}  // namespace isotemporal
