#include "isotemporal/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "isotemporal/temporal_network.hpp"

namespace isotemporal {

namespace {

std::string pm_text_of_mask(std::uint64_t m, int n) {
  std::string s(n, '0');
  for (int a = 0; a < n; ++a) {
    bool in_from_left = (m >> ((a + n - 1) % n)) & 1;
    bool out_to_right = (m >> a) & 1;
    if (in_from_left && !out_to_right) {
      s[a] = '+';
    } else if (!in_from_left && out_to_right) {
      s[a] = '-';
    }
  }
  return s;
}

// ASCII order of '+' '-' '0' matches the canonical symbol order, so plain
// string comparison canonicalizes correctly.
std::string canonical_text(const std::string& s) {
  int n = static_cast<int>(s.size());
  std::string doubled = s + s;
  std::string reversed(s.rbegin(), s.rend());
  std::string rev_doubled = reversed + reversed;
  std::string best = s;
  for (int r = 0; r < n; ++r) {
    if (doubled.compare(r, n, best) < 0) best = doubled.substr(r, n);
    if (rev_doubled.compare(r, n, best) < 0) best = rev_doubled.substr(r, n);
  }
  return best;
}

std::uint64_t rotation_canonical_mask(std::uint64_t m, int n) {
  std::uint64_t mask = (1ull << n) - 1;
  std::uint64_t best = m;
  for (int r = 1; r < n; ++r) {
    best = std::min(best, ((m >> r) | (m << (n - r))) & mask);
  }
  return best;
}

std::uint64_t reverse_mask(std::uint64_t m, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    if ((m >> i) & 1) out |= 1ull << (n - 1 - i);
  }
  return out;
}

}  // namespace

unsigned symmetry_signature(const SymmetryProfile& profile) {
  return (profile.has_mirror() ? 8u : 0u) | (profile.has_skewed_mirror() ? 4u : 0u) |
         (profile.has_rotational() ? 2u : 0u) |
         (profile.has_skewed_rotational() ? 1u : 0u);
}

std::string symmetry_flags(const SymmetryProfile& profile) {
  std::string s = "----";
  if (profile.has_mirror()) s[0] = 'M';
  if (profile.has_skewed_mirror()) s[1] = 'S';
  if (profile.has_rotational()) s[2] = 'R';
  if (profile.has_skewed_rotational()) s[3] = 'K';
  return s;
}

namespace detail {

std::map<std::string, std::uint64_t> sweep_orientations(int n, std::uint64_t lo,
                                                        std::uint64_t hi) {
  std::map<std::string, std::uint64_t> buckets;
  std::uint64_t all_ones = (1ull << n) - 1;
  for (std::uint64_t m = lo; m < hi; ++m) {
    if (m == 0 || m == all_ones) continue;
    ++buckets[canonical_text(pm_text_of_mask(m, n))];
  }
  return buckets;
}

void merge_sweeps(std::map<std::string, std::uint64_t>& into,
                  const std::map<std::string, std::uint64_t>& from) {
  for (const auto& [key, count] : from) into[key] += count;
}

}  // namespace detail

ClassCensus enumerate_pm_classes(int n, int cap) {
  if (n < 3) throw std::invalid_argument("enumerate_pm_classes needs n >= 3");
  if (n > cap || n > kHardEnumerationLimit) {
    fail(ErrorCode::CapExceeded,
         "n = " + std::to_string(n) + " exceeds cap " +
             std::to_string(std::min(cap, kHardEnumerationLimit)));
  }

  auto buckets = detail::sweep_orientations(n, 1, (1ull << n) - 1);

  ClassCensus census;
  census.n = n;
  census.total_forms = 0;
  for (const auto& [text, orbit] : buckets) {
    ClassEntry entry{validate_pm(text), orbit, {}};
    entry.profile = detect_symmetries(entry.canonical);
    ++census.by_symmetry_combination[symmetry_signature(entry.profile)];
    census.total_forms += orbit;
    census.classes.push_back(std::move(entry));
  }
  return census;
}

ExactCount brute_force_class_count_via_labelings(int n) {
  if (n < 3) throw std::invalid_argument("needs n >= 3");
  if (n > 8) fail(ErrorCode::CapExceeded, "labeling sweep is capped at n = 8");

  std::vector<int> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 1);
  std::vector<NGon> representatives;
  do {
    NGon g = NGon::from_ranks(ranks);
    bool found = false;
    for (const NGon& rep : representatives) {
      if (find_temporal_isomorphism(g.network(), rep.network())) {
        found = true;
        break;
      }
    }
    if (!found) representatives.push_back(std::move(g));
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return ExactCount(representatives.size());
}

FootprintEnumeration enumerate_footprints(int n, FootprintMode mode) {
  if (n < 3) throw std::invalid_argument("needs n >= 3");
  if (n > 24) fail(ErrorCode::CapExceeded, "footprint sweep is capped at n = 24");

  std::set<std::uint64_t> canon;
  std::uint64_t all = 1ull << n;
  for (std::uint64_t m = 1; m < all; ++m) {
    int bits = std::popcount(m);
    if (bits < 2 || bits % 2 != 0) continue;
    std::uint64_t c = rotation_canonical_mask(m, n);
    if (mode == FootprintMode::RotationAndReflection) {
      c = std::min(c, rotation_canonical_mask(reverse_mask(m, n), n));
    }
    canon.insert(c);
  }

  FootprintEnumeration out;
  out.count = ExactCount(canon.size());
  for (std::uint64_t m : canon) {
    std::vector<int> pos;
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1) pos.push_back(i);
    }
    out.representatives.emplace_back(n, std::move(pos));
  }
  return out;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerificationCheck& c) { return c.pass; });
}

VerificationReport verify(int from, int to, int cap) {
  VerificationReport report;
  for (int n = std::max(from, 3); n <= to && n <= cap; ++n) {
    ClassCensus census = enumerate_pm_classes(n, cap);

    auto add = [&](const std::string& name, ExactCount formula, ExactCount oracle) {
      report.checks.push_back({n, name, formula, oracle, formula == oracle});
    };

    add("classes", isotemporal_class_count(n), ExactCount(census.classes.size()));
    if (n <= 24) {
      add("footprints", footprint_count(n),
          enumerate_footprints(n, FootprintMode::RotationOnly).count);
    }
    add("census-total", (ExactCount(1) << n) - 2, census.total_forms);
    if (n <= 8) {
      add("labelings", isotemporal_class_count(n),
          brute_force_class_count_via_labelings(n));
    }
    if (n % 2 == 0) {
      std::set<std::vector<int>> mirror_fps;
      std::uint64_t skewed = 0;
      for (const ClassEntry& entry : census.classes) {
        if (entry.profile.has_mirror()) {
          mirror_fps.insert(
              canonical_footprint(footprint_of(entry.canonical)).positions());
        }
        if (entry.profile.has_skewed_rotational()) ++skewed;
      }
      add("mirror", mirror_footprint_count(n), ExactCount(mirror_fps.size()));
      add("skewed", skewed_rotational_form_count(n), ExactCount(skewed));
    }
  }
  return report;
}

}  // namespace isotemporal
