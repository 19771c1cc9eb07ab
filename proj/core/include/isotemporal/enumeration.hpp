#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isotemporal/counting.hpp"
#include "isotemporal/cycle_forms.hpp"
#include "isotemporal/symmetry.hpp"

namespace isotemporal {

inline constexpr int kDefaultEnumerationCap = 20;
// Sweeps walk 2^n masks; beyond this n the run time is unreasonable no matter
// what cap the caller asked for.
inline constexpr int kHardEnumerationLimit = 28;

struct ClassEntry {
  PmForm canonical;
  std::uint64_t orbit_size = 0;
  SymmetryProfile profile;
};

// Symmetry signature bits, high to low: Mirror, Skewed mirror, Rotational,
// sKewed rotational ("MSRK").
unsigned symmetry_signature(const SymmetryProfile& profile);
std::string symmetry_flags(const SymmetryProfile& profile);

struct ClassCensus {
  int n = 0;
  std::vector<ClassEntry> classes;  // ordered by canonical form text
  ExactCount total_forms;           // == 2^n - 2
  std::map<unsigned, std::uint64_t> by_symmetry_combination;
};

// Sweeps all 2^n - 2 realizable orientations and buckets their ±-forms by
// canonical form. Errors: CapExceeded when n > cap.
ClassCensus enumerate_pm_classes(int n, int cap = kDefaultEnumerationCap);

namespace detail {
// Partition of the orientation sweep over mask range [lo, hi); merging
// partial results is associative set-union with summed orbit counts.
std::map<std::string, std::uint64_t> sweep_orientations(int n, std::uint64_t lo,
                                                        std::uint64_t hi);
void merge_sweeps(std::map<std::string, std::uint64_t>& into,
                  const std::map<std::string, std::uint64_t>& from);
}  // namespace detail

// Groups all n! rank labelings of the n-gon by find_temporal_isomorphism and
// returns the number of groups. Capped at n = 8. Errors: CapExceeded.
ExactCount brute_force_class_count_via_labelings(int n);

enum class FootprintMode { RotationOnly, RotationAndReflection };

struct FootprintEnumeration {
  ExactCount count;
  std::vector<Footprint> representatives;  // canonical, ordered
};

// Orbit count of even-cardinality nonempty subsets of Z_n under the chosen
// group. Capped at n = 24. Errors: CapExceeded.
FootprintEnumeration enumerate_footprints(int n, FootprintMode mode);

struct VerificationCheck {
  int n = 0;
  std::string check;
  ExactCount formula;
  ExactCount oracle;
  bool pass = false;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool all_pass() const;
};

// Cross-checks closed formulas against the enumeration oracles for each n in
// [from, to]: class count vs census, footprint count vs subset orbits, census
// totals, the factorial-labeling oracle (n <= 8), and for even n the mirror
// and skewed-rotational subcounts. Check failures are report entries, never
// exceptions. Precondition: to <= cap.
VerificationReport verify(int from, int to, int cap = kDefaultEnumerationCap);

}  // namespace isotemporal
