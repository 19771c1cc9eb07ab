#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isotemporal/errors.hpp"
#include "isotemporal/temporal_network.hpp"

namespace isotemporal {

// Label alphabet of a ±-form. The numeric order Plus < Minus < Zero is the
// canonicalization order; it coincides with ASCII order of '+' '-' '0'.
enum class PmLabel : std::uint8_t { Plus = 0, Minus = 1, Zero = 2 };

inline char to_char(PmLabel l) {
  return l == PmLabel::Plus ? '+' : l == PmLabel::Minus ? '-' : '0';
}
inline PmLabel negated(PmLabel l) {
  return l == PmLabel::Plus ? PmLabel::Minus
       : l == PmLabel::Minus ? PmLabel::Plus
                             : PmLabel::Zero;
}

// Direction bits of the line-graph cycle: bit i is true iff the edge at
// position i carries an earlier time than the edge at position i+1 (mod n),
// i.e. the line-graph arrow points forward. A realizable orientation is never
// all-equal.
class CycleOrientation {
 public:
  explicit CycleOrientation(std::vector<bool> bits);

  int size() const { return static_cast<int>(bits_.size()); }
  bool bit(int i) const { return bits_[i]; }
  const std::vector<bool>& bits() const { return bits_; }

  friend bool operator==(const CycleOrientation&, const CycleOrientation&) = default;

 private:
  std::vector<bool> bits_;
};

// Cyclic word over {+,-,0}: position a is + at a local time maximum, - at a
// local minimum, 0 on a slope. Invariants: at least one +, nonzero labels
// strictly alternate +,-,+,- cyclically (hence equal counts).
class PmForm {
 public:
  explicit PmForm(std::vector<PmLabel> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  PmLabel label(int i) const { return labels_[i]; }
  // label at position i mod n
  PmLabel at(int i) const;
  const std::vector<PmLabel>& labels() const { return labels_; }
  std::string str() const;

  friend bool operator==(const PmForm&, const PmForm&) = default;
  friend bool operator<(const PmForm& a, const PmForm& b) {
    return a.labels_ < b.labels_;
  }

 private:
  std::vector<PmLabel> labels_;
};

// Positions of the nonzero labels; always even in size and nonempty.
class Footprint {
 public:
  Footprint(int n, std::vector<int> positions);

  int size() const { return n_; }
  const std::vector<int>& positions() const { return positions_; }  // sorted
  bool contains(int pos) const;

  friend bool operator==(const Footprint&, const Footprint&) = default;

 private:
  int n_ = 0;
  std::vector<int> positions_;
};

CycleOrientation line_graph_orientation(const NGon& g);
PmForm pm_from_orientation(const CycleOrientation& o);
CycleOrientation orientation_from_pm(const PmForm& p);

// Parses a string over '+', '-', '0' (position 0 first).
// Errors: TooShort, NoPlus, AlternationViolated.
PmForm validate_pm(std::string_view text);

Footprint footprint_of(const PmForm& p);

// A witness n-gon whose ±-form is p: the lexicographically smallest linear
// extension of the arrow constraints (rank 1 goes to the lowest-index
// eligible edge, then rank 2, ...).
NGon realize_labeling(const PmForm& p);

// Label at new position i is the old label at (i+rot) mod n, or at
// (rot-i) mod n when reflecting.
PmForm dihedral_transform(const PmForm& p, int rot, bool reflect);

PmForm negate(const PmForm& p);

// Minimum of the 2n dihedral transforms under Plus < Minus < Zero; constant
// on dihedral orbits, so equal canonical forms == same isotemporal class.
PmForm canonical_pm(const PmForm& p);

// Footprint of the lexicographically-least dihedral transform of fp;
// constant on dihedral orbits of footprints.
Footprint canonical_footprint(const Footprint& fp);

}  // namespace isotemporal
