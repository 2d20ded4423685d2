// Normal forms in the quotient rings
//
//   G  = Z[t±, q, p±, x1±..x2g±] / (q(p - t), q^2 - (1 - t)(1 - p))
//   R' = Z[t±, q, p±, s±]        / (same two relations)
//
// Both rings have the shape S[p±, q] / I with S a Laurent ring in the
// remaining variables. As an S-module the quotient splits as
//
//   S[p±] / (h)  (+)  q * S[p±] / (p - t),      h = (1 - t)(1 - p)(p - t),
//
// because q^2 * p = q * (q * p) forces h = 0. An element is stored as A + B*q
// with B free of p, and A reduced modulo h: writing A = Q*g + a0 + a1*p with
// g = (p - 1)(p - t), the canonical A is a0 + a1*p + Q(t = 1)*g. Two elements
// are equal iff their stored (A, B) are equal.

#ifndef KNOTINV_QUOTIENT_HPP
#define KNOTINV_QUOTIENT_HPP

#include <string>

#include "knotinv/laurent.hpp"

namespace knotinv {

class QuotientElement {
 public:
  QuotientElement() = default;
  explicit QuotientElement(VarSet vars);

  static QuotientElement zero(VarSet vars) { return QuotientElement(vars); }
  static QuotientElement one(VarSet vars);
  static QuotientElement from_integer(VarSet vars, const Integer& c);
  /// Any polynomial over the ring's variables (arbitrary q- and p-degree).
  static QuotientElement normalize(const LaurentPoly& raw);
  /// A + B*q; B may mention p, both parts may be arbitrary.
  static QuotientElement from_parts(const LaurentPoly& a, const LaurentPoly& b);

  VarSet vars() const { return vars_; }
  const LaurentPoly& a_part() const { return a_; }
  const LaurentPoly& b_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }

  QuotientElement zero_like() const { return QuotientElement(vars_); }
  QuotientElement one_like() const { return one(vars_); }

  QuotientElement& operator+=(const QuotientElement& rhs);
  QuotientElement& operator-=(const QuotientElement& rhs);
  QuotientElement operator-() const;
  friend QuotientElement operator+(QuotientElement a, const QuotientElement& b) { return a += b; }
  friend QuotientElement operator-(QuotientElement a, const QuotientElement& b) { return a -= b; }
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b);
  QuotientElement& operator*=(const QuotientElement& rhs) { return *this = *this * rhs; }

  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.vars_ == b.vars_ && a.a_ == b.a_ && a.b_ == b.b_;
  }

  /// Multiplies by sign * t^alpha * p^beta (a unit).
  QuotientElement times_unit(int sign, int alpha, int beta) const;
  QuotientElement times_q() const;

  /// Ring homomorphisms used to pin down unit shifts:
  ///   (p -> 1, q -> 0), (t -> 1, q -> 0), (p -> t, q -> 1 - t).
  LaurentPoly image_p_one() const;
  LaurentPoly image_t_one() const;
  LaurentPoly image_p_equals_t() const;

  /// A + B*q as a single polynomial.
  LaurentPoly expanded() const;
  std::string to_string() const { return expanded().to_string(); }

 private:
  QuotientElement(VarSet vars, LaurentPoly a, LaurentPoly b)
      : vars_(vars), a_(std::move(a)), b_(std::move(b)) {}

  VarSet vars_;
  LaurentPoly a_;
  LaurentPoly b_;
};

using GElement = QuotientElement;
using RPrimeElement = QuotientElement;

/// Reduces a q-free polynomial modulo h = (1 - t)(1 - p)(p - t) to its canonical representative.
LaurentPoly reduce_mod_h(const LaurentPoly& a);

/// Parses the canonical rendering of a quotient element.
QuotientElement parse_quotient(std::string_view text, VarSet vars);

/// Short ring name for output: "G(g=1)" or "R'".
std::string ring_name(VarSet vars);

}  // namespace knotinv

#endif  // KNOTINV_QUOTIENT_HPP
