#include "isotemporal/counting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace isotemporal {

namespace {

using Rational = boost::multiprecision::cpp_rational;

ExactCount pow2(std::uint64_t e) { return ExactCount(1) << e; }

// Divisions in these formulas are exact; a nonzero remainder means the
// formula (not the input) is wrong, so treat it as a hard error.
ExactCount exact_divide(const ExactCount& value, const ExactCount& by) {
  if (value % by != 0) {
    throw std::logic_error("count formula produced a non-integer");
  }
  return value / by;
}

ExactCount to_integer(const Rational& value) {
  if (denominator(value) != 1) {
    throw std::logic_error("count formula produced a non-integer");
  }
  return numerator(value);
}

std::uint64_t rotl(std::uint64_t m, int r, int n) {
  r %= n;
  std::uint64_t mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
  return ((m >> r) | (m << (n - r))) & mask;
}

std::uint64_t reverse_mask(std::uint64_t m, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    if ((m >> i) & 1) out |= 1ull << (n - 1 - i);
  }
  return out;
}

std::uint64_t dihedral_canonical_mask(std::uint64_t m, int n) {
  std::uint64_t best = m;
  std::uint64_t rev = reverse_mask(m, n);
  for (int r = 0; r < n; ++r) {
    best = std::min(best, rotl(m, r, n));
    best = std::min(best, rotl(rev, r, n));
  }
  return best;
}

}  // namespace

ExactCount totient(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("totient needs d >= 1");
  std::uint64_t result = d;
  std::uint64_t m = d;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return ExactCount(result);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors needs n >= 1");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

ExactCount footprint_count(int n) {
  if (n < 3) throw std::invalid_argument("footprint_count needs n >= 3");
  // Burnside over rotations: a rotation with d cycles of odd length n/d fixes
  // the even-size subsets using an even number of cycles; with even-length
  // cycles every union is even-sized.
  ExactCount sum = 0;
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(n))) {
    std::uint64_t len = static_cast<std::uint64_t>(n) / d;
    ExactCount fixed = (len % 2 == 1) ? pow2(d - 1) - 1 : pow2(d) - 1;
    sum += totient(len) * fixed;
  }
  return exact_divide(sum, n);
}

ExactCount mirror_footprint_count(int n) {
  if (n % 2 != 0) fail(ErrorCode::OddInput, "mirror axes need an even n-gon");
  if (n < 4) throw std::invalid_argument("mirror_footprint_count needs n >= 4");
  if (n > 62) fail(ErrorCode::TooLarge, "axis-rooted sweep is limited to n <= 62");

  // A mirror axis passes through two footprint edges; root the axis at
  // positions 0 and n/2 and sweep the free half. Distinct dihedral classes
  // among these representatives are exactly the mirror-capable footprints.
  int h = n / 2;
  std::set<std::uint64_t> classes;
  for (std::uint64_t half = 0; half < (1ull << (h - 1)); ++half) {
    std::uint64_t s = 1ull | (1ull << h);
    for (int i = 1; i < h; ++i) {
      if ((half >> (i - 1)) & 1) s |= (1ull << i) | (1ull << (n - i));
    }
    classes.insert(dihedral_canonical_mask(s, n));
  }
  return ExactCount(classes.size());
}

ExactCount skewed_rotational_form_count(int n) {
  if (n % 2 != 0) fail(ErrorCode::OddInput, "skewed rotation needs an even n-gon");
  if (n < 4) throw std::invalid_argument("skewed_rotational_form_count needs n >= 4");

  ExactCount sum = 0;
  for (std::uint64_t c : divisors(static_cast<std::uint64_t>(n) / 2)) {
    sum += pow2(static_cast<std::uint64_t>(n) / (2 * c) - 1) * totient(2 * c);
  }
  Rational lambda;  // forms with skewed rotation plus a reflective symmetry
  if (n % 4 == 2) {
    lambda = Rational(pow2((n - 2) / 4));
  } else {
    lambda = Rational(pow2((n - 4) / 4) + pow2((n - 4 + 7) / 8));
  }
  Rational value = (Rational(2 * sum, n) + lambda) / 2;
  return to_integer(value);
}

ExactCount isotemporal_class_count(int n) {
  if (n < 3) throw std::invalid_argument("isotemporal_class_count needs n >= 3");
  ExactCount sum = 0;
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(n))) {
    sum += pow2(static_cast<std::uint64_t>(n) / d - 1) * totient(d);
  }
  if (n % 2 == 1) {
    // sum_d phi(d) = n folds the -1 per divisor term into one subtraction
    return exact_divide(sum - n, n);
  }
  // Even n adds the reflection classes: each label-reversing map fixes
  // 2^(n/2) orientations for half the axes, none for the other half.
  return exact_divide(sum, n) - 1 + pow2((n - 4) / 2);
}

ExactCount binary_necklace_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("binary_necklace_count needs n >= 1");
  ExactCount sum = 0;
  for (std::uint64_t d : divisors(n)) {
    sum += totient(d) * pow2(n / d);
  }
  // the divisibility by n is a theorem; keep it checked
  return exact_divide(sum, n);
}

}  // namespace isotemporal
