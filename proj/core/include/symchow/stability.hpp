#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symchow/rational.hpp"

namespace symchow {

/// The open interval ((p - sqrt(q))/2, (p + sqrt(q))/2) with integer p and
/// q >= 0. Membership of a rational mu is decided exactly by comparing
/// (2 mu - p)^2 against q; no floating point.
struct SurdInterval {
  long p = 0;
  long q = 0;

  bool contains(const Rational& mu) const;
  bool on_boundary(const Rational& mu) const;
  /// True when q == 0: the open interval holds no point.
  bool is_empty_set() const { return q == 0; }
  /// True iff [lo, hi] is contained in the open interval (a, b),
  /// i.e. a <= lo and hi <= b, decided exactly.
  bool within(const Rational& a, const Rational& b) const;
  /// Exact endpoints when q is a perfect square.
  std::optional<std::pair<Rational, Rational>> rational_endpoints() const;
  /// "(-1, 9)" when exact, "((p - sqrt(q))/2, (p + sqrt(q))/2)" otherwise.
  std::string str() const;

  friend bool operator==(const SurdInterval&, const SurdInterval&) = default;
};

/// The slope interval where the discriminant quadratic
/// mu^2 - (n-2) mu + (n-1)(g-1) is negative, with endpoints
/// (n-2)/2 -+ sqrt((n-2)^2 - 4(n-1)(g-1))/2. Returns nullopt when the
/// radicand is negative; a zero radicand yields the degenerate interval
/// (which contains no point). Requires n >= 2 and g >= 0.
std::optional<SurdInterval> bogomolov_gap(long n, long g);

enum class Verdict {
  known_stable,
  known_semistable_boundary,
  section_unstable,
  bogomolov_unstable,
  unknown,
};

const char* verdict_name(Verdict v);

struct Witness {
  std::string criterion;
  std::string interval;
};

struct StabilityVerdict {
  Verdict verdict = Verdict::unknown;
  std::vector<Witness> witnesses;
};

/// Classifies the slope mu of a (semi)stable input bundle on a genus-g
/// curve for the tautological bundle on C^(n). Criteria, in order:
/// mu strictly outside [-1, n-1]  -> known_stable;
/// mu at an endpoint              -> known_semistable_boundary;
/// mu in (g-1, n-1)               -> section_unstable (the structure sheaf
///                                   destabilises, via Riemann-Roch);
/// mu in the Bogomolov gap        -> bogomolov_unstable (added as an extra
///                                   witness when sections already fired);
/// otherwise                      -> unknown.
StabilityVerdict classify_slope(long n, long g, const Rational& mu);

/// Convenience wrapper: mu = degree / rank (rank must be positive).
StabilityVerdict classify_slope(long n, long g, const Rational& degree,
                                const Rational& rank);

struct ModuliDim {
  Rational expected_dim;
  Rational chi;  // chi(O_{C^(2)}) = (g^2 - 3g + 2)/2
};

/// Expected dimension of the moduli space of stable sheaves on the surface
/// C^(2) sharing the invariants of E^{[2]}:
///   d^2 + r^2 (g-1) - (1/2)(4 r^2 - 1)(g^2 - 3g + 2).
/// Requires r >= 1 and g >= 0.
ModuliDim moduli_expected_dim(long g, long r, long d);

}  // namespace symchow
