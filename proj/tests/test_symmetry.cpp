#include <doctest.h>

#include <algorithm>

#include "isotemporal/symmetry.hpp"
#include "test_support.hpp"

using namespace isotemporal;
using testsupport::all_valid_forms;

namespace {

// reflection parameter c in Z_n for every axis of the profile, so that axis
// positions can be compared around the cycle: an edge axis through e_a is the
// map j -> 2a - j, a vertex axis through v_i is j -> 2i - 1 - j.
std::vector<int> mirror_reflection_params(const SymmetryProfile& s, int n) {
  std::vector<int> cs;
  for (int a : s.mirror_edge_axes) cs.push_back(((2 * a) % n + n) % n);
  return cs;
}

std::vector<int> skew_reflection_params(const SymmetryProfile& s, int n) {
  std::vector<int> cs;
  for (int a : s.skewed_mirror_edge_axes) cs.push_back(((2 * a) % n + n) % n);
  for (int i : s.skewed_mirror_vertex_axes) cs.push_back(((2 * i - 1) % n + n) % n);
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());  // odd n lists both names
  return cs;
}

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("profile of '+0-0'") {
  SymmetryProfile s = detect_symmetries(validate_pm("+0-0"));
  CHECK(s.mirror_edge_axes == std::vector<int>{0});
  CHECK(s.skewed_mirror_edge_axes == std::vector<int>{1});
  CHECK(s.skewed_mirror_vertex_axes.empty());
  CHECK(s.rotational_folds.empty());
  CHECK(s.skewed_rotational_folds == std::vector<int>{2});
  CHECK(s.negation_isomorphic);
}

TEST_CASE("profile of '+-0'") {
  SymmetryProfile s = detect_symmetries(validate_pm("+-0"));
  CHECK(s.mirror_edge_axes.empty());
  // the one reflection crosses e_2 and the opposite vertex v_1
  CHECK(s.skewed_mirror_edge_axes == std::vector<int>{2});
  CHECK(s.skewed_mirror_vertex_axes == std::vector<int>{1});
  CHECK(s.rotational_folds.empty());
  CHECK(s.skewed_rotational_folds.empty());
  CHECK(s.negation_isomorphic);
}

TEST_CASE("profile of '+-+-'") {
  SymmetryProfile s = detect_symmetries(validate_pm("+-+-"));
  CHECK(s.mirror_edge_axes == std::vector<int>{0, 1});
  CHECK(s.rotational_folds == std::vector<int>{2});
  CHECK(s.skewed_rotational_folds == std::vector<int>{4});
  CHECK(s.negation_isomorphic);
}

TEST_CASE("footprint folds and reflections") {
  CHECK(footprint_rotational_folds(Footprint(8, {0, 2, 4, 6})) == std::set<int>{2, 4});
  CHECK(footprint_rotational_folds(Footprint(8, {2, 3, 5, 7})).empty());
  CHECK(footprint_rotational_folds(Footprint(6, {0, 3})) == std::set<int>{2});

  CHECK(footprint_has_reflection(Footprint(8, {0, 1})));
  CHECK_FALSE(footprint_has_reflection(Footprint(8, {0, 1, 2, 4})));
  CHECK_FALSE(footprint_has_reflection(Footprint(8, {2, 3, 5, 7})));

  CHECK_THROWS(Footprint(8, {0, 1, 3}));  // odd cardinality is not a footprint
}

TEST_CASE("negation isomorphism by dihedral search") {
  CHECK(is_negation_isomorphic(validate_pm("+-0")));
  CHECK(is_negation_isomorphic(validate_pm("+-0+-000")));
  CHECK(is_negation_isomorphic(validate_pm("+-000")));
  // footprint {2,3,5,7} has neither reflective nor rotational set symmetry,
  // so the form and its negation fall in different classes
  CHECK_FALSE(is_negation_isomorphic(validate_pm("00+-0+0-")));
}

TEST_CASE("negation isomorphism iff skewed mirror or skewed rotation") {
  for (int n = 3; n <= 14; ++n) {
    for (const PmForm& p : all_valid_forms(n)) {
      SymmetryProfile s = detect_symmetries(p);
      CHECK(s.negation_isomorphic ==
            (s.has_skewed_mirror() || s.has_skewed_rotational()));
    }
  }
}

TEST_CASE("odd-gons admit no skewed rotational fold") {
  for (int n = 3; n <= 15; n += 2) {
    for (const PmForm& p : all_valid_forms(n)) {
      CHECK(detect_symmetries(p).skewed_rotational_folds.empty());
    }
  }
}

TEST_CASE("odd-gons admit no mirror axis") {
  for (int n = 3; n <= 15; n += 2) {
    for (const PmForm& p : all_valid_forms(n)) {
      CHECK(detect_symmetries(p).mirror_edge_axes.empty());
    }
  }
}

TEST_CASE("axis type is decided by the crossed labels (even n)") {
  for (int n = 4; n <= 14; n += 2) {
    for (const PmForm& p : all_valid_forms(n)) {
      SymmetryProfile s = detect_symmetries(p);
      for (int a : s.mirror_edge_axes) {
        CHECK(p.label(a) != PmLabel::Zero);
        CHECK(p.label(a + n / 2) != PmLabel::Zero);
      }
      for (int a : s.skewed_mirror_edge_axes) {
        CHECK(p.label(a) == PmLabel::Zero);
        CHECK(p.label(a + n / 2) == PmLabel::Zero);
      }
      // a symmetric vertex axis is necessarily skewed
      CHECK(mirror_vertex_axes(p).empty());
    }
  }
  for (int n = 3; n <= 13; n += 2) {
    for (const PmForm& p : all_valid_forms(n)) {
      CHECK(mirror_vertex_axes(p).empty());
    }
  }
}

TEST_CASE("mirror and skewed mirror axes alternate when both exist") {
  for (int n = 4; n <= 12; n += 2) {
    for (const PmForm& p : all_valid_forms(n)) {
      SymmetryProfile s = detect_symmetries(p);
      if (!s.has_mirror() || !s.has_skewed_mirror()) continue;
      std::vector<int> mirror = mirror_reflection_params(s, n);
      std::vector<int> skew = skew_reflection_params(s, n);
      CHECK(mirror.size() == skew.size());

      // sorted by reflection parameter, the two kinds interleave strictly
      std::vector<std::pair<int, int>> axes;  // (c, kind)
      for (int c : mirror) axes.emplace_back(c, 0);
      for (int c : skew) axes.emplace_back(c, 1);
      std::sort(axes.begin(), axes.end());
      for (std::size_t i = 0; i < axes.size(); ++i) {
        CHECK(axes[i].second != axes[(i + 1) % axes.size()].second);
      }
    }
  }
}

TEST_CASE("mirror+skewed-mirror occurs iff skewed-mirror+skewed-rotation") {
  for (int n = 3; n <= 14; ++n) {
    for (const PmForm& p : all_valid_forms(n)) {
      SymmetryProfile s = detect_symmetries(p);
      CHECK((s.has_mirror() && s.has_skewed_mirror()) ==
            (s.has_skewed_mirror() && s.has_skewed_rotational()));
    }
  }
}

TEST_CASE("skewed rotation parity criterion") {
  // d-fold skewed rotation iff the footprint is d-fold rotational, d is
  // even, and n/d consecutive edges carry an odd number of nonzero labels
  for (int n = 3; n <= 14; ++n) {
    for (const PmForm& p : all_valid_forms(n)) {
      SymmetryProfile s = detect_symmetries(p);
      Footprint fp = footprint_of(p);
      auto fp_folds = footprint_rotational_folds(fp);
      for (int d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        int window = 0;
        for (int j = 0; j < n / d; ++j) {
          if (fp.contains(j)) ++window;
        }
        bool expected = fp_folds.count(d) && d % 2 == 0 && window % 2 == 1;
        bool actual = std::find(s.skewed_rotational_folds.begin(),
                                s.skewed_rotational_folds.end(),
                                d) != s.skewed_rotational_folds.end();
        CHECK(actual == expected);
      }
    }
  }
}

}  // TEST_SUITE
