#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symchow/chow_class.hpp"

namespace symchow {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EvalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace dsl {

/// Exponent literal: a fixed k >= 0, or the form n - k which is resolved
/// against the --n flag at evaluation time.
struct Exponent {
  bool uses_n = false;
  long offset = 0;  // value = uses_n ? n - offset : offset

  long resolve(int n) const;  // throws EvalError when negative
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind {
    number,
    symbol,
    atom_h,
    atom_delta,
    atom_delta_prime,
    atom_fund,
    atom_point,     // P(i)
    atom_diagonal,  // D(i,j)
    atom_eta,       // eta({i,...})
    add,
    sub,
    mul,
    neg,
    pow,
    integrate,
    pushforward,  // pushforward1(e)
    pullback,     // pullback1(e)
  };

  Kind kind;
  Rational value;             // number
  Symbol symbol = Symbol::g;  // symbol
  int i = 0, j = 0;           // atom indices
  std::vector<int> indices;   // eta set, ascending
  Exponent exponent;          // pow
  ExprPtr a, b;               // children
};

bool equal(const Expr& x, const Expr& y);

/// Recursive-descent parse with the precedence ^ over * over +/-,
/// whitespace-insensitive. Throws ParseError with the byte offset.
ExprPtr parse(std::string_view text);

/// Canonical rendering; parse(print(e)) is structurally equal to e.
std::string print(const Expr& e);

using Value = std::variant<RatPoly, ChowClass>;

/// Evaluates on ambient C^n. Scalars promote to multiples of the
/// fundamental class where a class is required. pushforward1 lowers its
/// result to C^{n-1}; the argument of pullback1 is evaluated on C^{n-1}.
/// The exponent token n always binds to the top-level n.
Value evaluate(const Expr& e, int n);

}  // namespace dsl
}  // namespace symchow
