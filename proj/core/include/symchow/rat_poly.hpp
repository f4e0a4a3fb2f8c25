#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "symchow/rational.hpp"

namespace symchow {

/// The three parameters appearing in every closed-form identity the engine
/// handles: curve genus g, bundle degree d, bundle rank r.
enum class Symbol : std::uint8_t { g = 0, d = 1, r = 2 };

const char* symbol_name(Symbol s);

/// Exponent vector of a monomial in (g, d, r).
struct Monomial {
  std::uint32_t g = 0;
  std::uint32_t d = 0;
  std::uint32_t r = 0;

  std::uint32_t degree() const { return g + d + r; }
  std::uint32_t exponent(Symbol s) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: total degree first, then (g, d, r).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.g != b.g) return a.g < b.g;
    if (a.d != b.d) return a.d < b.d;
    return a.r < b.r;
  }
};

class MissingSymbolError : public std::invalid_argument {
 public:
  explicit MissingSymbolError(Symbol s);
  Symbol symbol() const { return symbol_; }

 private:
  Symbol symbol_;
};

/// Exact values for a subset of the symbols.
struct Assignment {
  std::optional<Rational> g;
  std::optional<Rational> d;
  std::optional<Rational> r;

  const std::optional<Rational>& operator[](Symbol s) const;
  bool empty() const { return !g && !d && !r; }
};

/// Sparse polynomial over Q in the symbols g, d, r.
///
/// Zero coefficients are never stored, so two values are equal iff their
/// term maps are identical; all arithmetic is exact.
class RatPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  RatPoly() = default;  // zero
  RatPoly(long value);
  RatPoly(const Rational& value);
  static RatPoly sym(Symbol s);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value of a constant polynomial (zero when empty).
  Rational constant_value() const;
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  std::uint32_t degree() const;  // 0 for the zero polynomial

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const RatPoly& rhs);
  RatPoly& operator*=(const Rational& c);
  RatPoly& operator/=(const Rational& c);  // throws on zero divisor
  RatPoly operator-() const;

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend RatPoly operator/(RatPoly a, const Rational& c) { return a /= c; }

  RatPoly pow(unsigned k) const;

  /// Exact substitution. The assignment must cover every symbol that
  /// occurs in the polynomial; otherwise MissingSymbolError.
  Rational eval(const Assignment& a) const;

  /// Substitutes the given symbols and keeps the others symbolic.
  RatPoly substitute(const Assignment& a) const;

  /// Canonical rendering with explicit '*' and '^'. Terms are collected by
  /// their (d, r) monomial in graded-lex order; a multi-term genus
  /// coefficient is parenthesised, e.g. "d^2 - 2*d*r - (g - 1)*r^2".
  std::string str() const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

inline RatPoly sym_g() { return RatPoly::sym(Symbol::g); }
inline RatPoly sym_d() { return RatPoly::sym(Symbol::d); }
inline RatPoly sym_r() { return RatPoly::sym(Symbol::r); }

}  // namespace symchow
