#include "isotemporal/cycle_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace isotemporal {

CycleOrientation::CycleOrientation(std::vector<bool> bits) : bits_(std::move(bits)) {
  if (bits_.size() < 3) {
    fail(ErrorCode::TooShort, "orientation needs at least 3 bits");
  }
  // all-equal bits would be a directed cycle of strict inequalities
  bool first = bits_[0];
  if (std::all_of(bits_.begin(), bits_.end(), [&](bool b) { return b == first; })) {
    throw std::invalid_argument("all-equal orientation is unrealizable");
  }
}

PmForm::PmForm(std::vector<PmLabel> labels) : labels_(std::move(labels)) {
  int n = static_cast<int>(labels_.size());
  if (n < 3) fail(ErrorCode::TooShort, "a ±-form needs at least 3 positions");

  std::vector<PmLabel> nonzero;
  for (PmLabel l : labels_) {
    if (l != PmLabel::Zero) nonzero.push_back(l);
  }
  if (std::find(nonzero.begin(), nonzero.end(), PmLabel::Plus) == nonzero.end()) {
    fail(ErrorCode::NoPlus, "a ±-form needs at least one '+'");
  }
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    if (nonzero[i] == nonzero[(i + 1) % nonzero.size()]) {
      fail(ErrorCode::AlternationViolated,
           "nonzero labels must alternate +,-,+,- around the cycle");
    }
  }
}

PmLabel PmForm::at(int i) const {
  int n = size();
  return labels_[((i % n) + n) % n];
}

std::string PmForm::str() const {
  std::string s;
  s.reserve(labels_.size());
  for (PmLabel l : labels_) s.push_back(to_char(l));
  return s;
}

Footprint::Footprint(int n, std::vector<int> positions)
    : n_(n), positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end()) {
    throw std::invalid_argument("footprint positions must be distinct");
  }
  if (!positions_.empty() &&
      (positions_.front() < 0 || positions_.back() >= n_)) {
    throw std::invalid_argument("footprint position out of range");
  }
  if (positions_.size() < 2 || positions_.size() % 2 != 0) {
    throw std::invalid_argument("a footprint has an even number (>= 2) of edges");
  }
}

bool Footprint::contains(int pos) const {
  return std::binary_search(positions_.begin(), positions_.end(), pos);
}

CycleOrientation line_graph_orientation(const NGon& g) {
  int n = g.size();
  const auto& r = g.cycle_ranks();
  std::vector<bool> bits(n);
  for (int i = 0; i < n; ++i) bits[i] = r[i] < r[(i + 1) % n];
  return CycleOrientation(std::move(bits));
}

PmForm pm_from_orientation(const CycleOrientation& o) {
  int n = o.size();
  std::vector<PmLabel> labels(n);
  for (int a = 0; a < n; ++a) {
    bool in_from_left = o.bit((a + n - 1) % n);  // tau(e_{a-1}) < tau(e_a)
    bool out_to_right = o.bit(a);                // tau(e_a) < tau(e_{a+1})
    if (in_from_left && !out_to_right) {
      labels[a] = PmLabel::Plus;  // local maximum
    } else if (!in_from_left && out_to_right) {
      labels[a] = PmLabel::Minus;  // local minimum
    } else {
      labels[a] = PmLabel::Zero;
    }
  }
  return PmForm(std::move(labels));
}

CycleOrientation orientation_from_pm(const PmForm& p) {
  // Bits flip exactly at nonzero labels, so one known bit propagates around:
  // '+' at a forces (bit_{a-1}, bit_a) = (1, 0), '-' forces (0, 1).
  int n = p.size();
  int anchor = -1;
  for (int i = 0; i < n; ++i) {
    if (p.label(i) == PmLabel::Plus) {
      anchor = i;
      break;
    }
  }
  std::vector<bool> bits(n);
  bits[anchor] = false;
  for (int k = 1; k < n; ++k) {
    int i = (anchor + k) % n;
    bits[i] = p.label(i) == PmLabel::Zero ? bits[(i + n - 1) % n]
                                          : !bits[(i + n - 1) % n];
  }
  return CycleOrientation(std::move(bits));
}

PmForm validate_pm(std::string_view text) {
  std::vector<PmLabel> labels;
  labels.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+': labels.push_back(PmLabel::Plus); break;
      case '-': labels.push_back(PmLabel::Minus); break;
      case '0': labels.push_back(PmLabel::Zero); break;
      default:
        throw std::invalid_argument(std::string("invalid ±-form character '") + c + "'");
    }
  }
  return PmForm(std::move(labels));
}

Footprint footprint_of(const PmForm& p) {
  std::vector<int> pos;
  for (int i = 0; i < p.size(); ++i) {
    if (p.label(i) != PmLabel::Zero) pos.push_back(i);
  }
  return Footprint(p.size(), std::move(pos));
}

NGon realize_labeling(const PmForm& p) {
  int n = p.size();
  const CycleOrientation o = orientation_from_pm(p);

  // Arrow constraints form an acyclic orientation of the cycle; assign ranks
  // greedily, lowest-index eligible edge first.
  // pred[i]: edges that must receive a smaller rank than edge i.
  std::vector<std::vector<int>> pred(n);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    if (o.bit(i)) {
      pred[j].push_back(i);  // tau(e_i) < tau(e_j)
    } else {
      pred[i].push_back(j);
    }
  }
  std::vector<int> ranks(n, 0);
  for (int next_rank = 1; next_rank <= n; ++next_rank) {
    for (int i = 0; i < n; ++i) {
      if (ranks[i] != 0) continue;
      bool ready = std::all_of(pred[i].begin(), pred[i].end(),
                               [&](int q) { return ranks[q] != 0; });
      if (ready) {
        ranks[i] = next_rank;
        break;
      }
    }
  }
  return NGon::from_ranks(ranks);
}

PmForm dihedral_transform(const PmForm& p, int rot, bool reflect) {
  int n = p.size();
  std::vector<PmLabel> labels(n);
  for (int i = 0; i < n; ++i) {
    int src = reflect ? (rot - i) : (i + rot);
    labels[i] = p.at(src);
  }
  return PmForm(std::move(labels));
}

PmForm negate(const PmForm& p) {
  std::vector<PmLabel> labels(p.size());
  for (int i = 0; i < p.size(); ++i) labels[i] = negated(p.label(i));
  return PmForm(std::move(labels));
}

PmForm canonical_pm(const PmForm& p) {
  PmForm best = p;
  for (int r = 0; r < p.size(); ++r) {
    for (bool refl : {false, true}) {
      PmForm t = dihedral_transform(p, r, refl);
      if (t < best) best = t;
    }
  }
  return best;
}

Footprint canonical_footprint(const Footprint& fp) {
  int n = fp.size();
  std::vector<int> best;
  for (int r = 0; r < n; ++r) {
    for (bool refl : {false, true}) {
      std::vector<int> t;
      t.reserve(fp.positions().size());
      for (int pos : fp.positions()) {
        int img = refl ? (r - pos) : (pos + r);
        t.push_back(((img % n) + n) % n);
      }
      std::sort(t.begin(), t.end());
      if (best.empty() || t < best) best = std::move(t);
    }
  }
  return Footprint(n, std::move(best));
}

}  // namespace isotemporal
