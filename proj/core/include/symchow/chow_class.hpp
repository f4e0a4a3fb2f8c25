#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "symchow/configuration.hpp"
#include "symchow/rat_poly.hpp"

namespace symchow {

/// A Chow class on C^n modulo numerical equivalence: a finite formal
/// RatPoly-linear combination of configurations. The span of the
/// configuration monomials is closed under the intersection product and
/// under pushforward/pullback along the forget-first-factor projection.
class ChowClass {
 public:
  explicit ChowClass(int n);  // the zero class on C^n
  static ChowClass zero(int n) { return ChowClass(n); }
  static ChowClass fundamental(int n);
  static ChowClass monomial(Configuration c, RatPoly coeff = RatPoly(1));

  // Generators. Indices are 1-based and must lie in 1..n.
  static ChowClass point(int n, int i);                    // pr_i^*[x]
  static ChowClass diagonal(int n, int i, int j);          // Delta_ij
  static ChowClass eta(int n, const std::vector<int>& I);  // prod pr_i^*[x]

  // Symmetrised divisors.
  static ChowClass h_tilde(int n);          // sum_i pr_i^*[x]
  static ChowClass big_diagonal(int n);     // delta = sum_{i<j} Delta_ij
  static ChowClass first_diagonals(int n);  // delta' = sum_{j>=2} Delta_1j

  int n() const { return n_; }
  const std::map<Configuration, RatPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RatPoly coeff(const Configuration& c) const;

  ChowClass& operator+=(const ChowClass& rhs);
  ChowClass& operator-=(const ChowClass& rhs);
  ChowClass& operator*=(const RatPoly& scalar);
  ChowClass& operator*=(const Rational& scalar);
  ChowClass operator-() const;

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(ChowClass a, const RatPoly& s) { return a *= s; }
  friend ChowClass operator*(const RatPoly& s, ChowClass a) { return a *= s; }
  friend ChowClass operator*(ChowClass a, const Rational& s) { return a *= s; }
  friend ChowClass operator*(const Rational& s, ChowClass a) { return a *= s; }

  /// Exact intersection product; both factors must live on the same C^n.
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);

  /// k-fold product; pow(0) is the fundamental class.
  ChowClass pow(unsigned k) const;

  /// Degree pairing against [C^n]: the sum of the coefficients of the
  /// fully pinned configurations (codimension exactly n).
  RatPoly integrate() const;

  /// Pushforward along (x_1,...,x_n) -> (x_2,...,x_n); requires n >= 2.
  ChowClass pushforward_forget_first() const;

  /// Flat pullback along the same projection: relabels 1..n to 2..n+1 and
  /// inserts a free singleton {1}.
  ChowClass pullback_insert_first() const;

  /// Applies a permutation of {1..n} to every configuration.
  ChowClass relabel(const std::vector<int>& perm) const;

  /// Terms of codimension exactly k.
  ChowClass graded_part(int k) const;

  /// e.g. "d · [{1}* {2}] - r · [{1,2}]"; "0" for the zero class.
  std::string str() const;

  friend bool operator==(const ChowClass&, const ChowClass&) = default;

 private:
  void add_term(const Configuration& c, const RatPoly& coeff);
  int n_;
  std::map<Configuration, RatPoly> terms_;
};

}  // namespace symchow
