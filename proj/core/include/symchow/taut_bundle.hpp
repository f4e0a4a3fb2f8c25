#pragma once

#include <vector>

#include "symchow/chow_class.hpp"

namespace symchow {

/// Rank and degree of the input bundle E on the curve. Symbolic by default
/// (the symbols r and d); set rational constants for numeric runs.
struct BundleSpec {
  RatPoly rank = sym_r();
  RatPoly degree = sym_d();
};

/// A Chern character truncated at codimension K: part(k) is the
/// codimension-k component on C^n.
class GradedClass {
 public:
  GradedClass(int n, int truncation);

  int n() const { return n_; }
  int truncation() const { return static_cast<int>(parts_.size()) - 1; }
  const ChowClass& part(int k) const { return parts_.at(k); }
  ChowClass& part(int k) { return parts_.at(k); }

  GradedClass& operator+=(const GradedClass& rhs);
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  /// Product truncated at the smaller of the two truncation orders.
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);

  GradedClass pullback_insert_first() const;

  friend bool operator==(const GradedClass&, const GradedClass&) = default;

 private:
  int n_;
  std::vector<ChowClass> parts_;
};

/// exp(c) = sum_{k<=K} c^k / k! for a divisor class c.
GradedClass exp_divisor(const ChowClass& divisor, int truncation);

/// ch of the twisted subsheaf pr_1^* E(-delta') on C^n,
/// i.e. (r + d P_1) * exp(-delta') truncated at K.
GradedClass ch_first_summand(int n, const BundleSpec& bundle = {},
                             int truncation = 2);

/// ch(pi_n^* E^{[n]}) truncated at K, computed along the structure sequence
///   0 -> pr_1^* E(-delta') -> pi_n^* E^{[n]} -> pr1bar^* pi_{n-1}^* E^{[n-1]} -> 0
/// by induction on n. Levels are memoised internally per call.
GradedClass ch_taut(int n, const BundleSpec& bundle = {}, int truncation = 2);

/// All levels 1..n_max in one sweep; levels[m] is the C^m character
/// (levels[0] is a placeholder).
std::vector<GradedClass> ch_taut_levels(int n_max, const BundleSpec& bundle = {},
                                        int truncation = 2);

/// The degree-1 part in closed form: d*H_tilde - r*delta.
ChowClass c1_taut_closed(int n, const BundleSpec& bundle = {});

/// integral of c1(E^{[n]})^2 H^{n-2} over C^(n): the recursion-derived c1
/// squared, paired with H_tilde^{n-2} on C^n and divided by n!.
RatPoly integral_c1sq(int n, const BundleSpec& bundle = {});

/// integral of ch_2(E^{[n]}) H^{n-2} over C^(n), recursion route.
RatPoly integral_ch2(int n, const BundleSpec& bundle = {});

enum class DiscriminantMode { engine, closed };

/// integral of Delta(E^{[n]}) H^{n-2} = -2 n r * integral(ch2 H^{n-2})
/// + integral(c1^2 H^{n-2}). The closed mode returns
/// d^2 - (n-2) d r + (n-1)(g-1) r^2 directly; the two agree identically.
RatPoly discriminant(int n, const BundleSpec& bundle = {},
                     DiscriminantMode mode = DiscriminantMode::engine);

}  // namespace symchow
