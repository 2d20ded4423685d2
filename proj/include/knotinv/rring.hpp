// Elements of R = Z[t±, q, p±, s±, r±, w] / (relations below) kept as raw
// polynomials and simplified by an oriented rewrite system.
//
// Rules, tried in this order on each term until nothing applies:
//   1. q p^k      -> q t^k
//   2. q^2        -> (1 - t)(1 - p)
//   3. w s^k      -> w
//   4. w r^k      -> w t^k
//   5. w p^k      -> w t^k
//   6. w q        -> w (1 - t)
//   7. w^2        -> (1 - t)(1 - r s)
//   8. r s q      -> q - (1 - t) + r s (1 - t)      [(1 - r s) q = (1 - r s)(1 - t)]
//
// Rule 8 is the difference of the two w^2 relations. The list is not known to
// be confluent, so a reduced element is a representative, not a normal form.

#ifndef KNOTINV_RRING_HPP
#define KNOTINV_RRING_HPP

#include <string>

#include "knotinv/laurent.hpp"

namespace knotinv {

class RElement {
 public:
  RElement() : poly_(VarSet::r_ring()) {}
  explicit RElement(LaurentPoly poly, bool reduced = false);

  static RElement from_integer(const Integer& c);
  static RElement variable(Var v, int power = 1);

  const LaurentPoly& poly() const { return poly_; }
  bool reduced() const { return reduced_; }
  bool is_zero() const { return poly_.is_zero(); }

  RElement zero_like() const { return RElement(); }
  RElement one_like() const { return from_integer(1); }

  RElement& operator+=(const RElement& rhs);
  RElement operator-() const;
  friend RElement operator+(RElement a, const RElement& b) { return a += b; }
  friend RElement operator-(RElement a, const RElement& b) { return a += -b; }
  friend RElement operator*(const RElement& a, const RElement& b);
  friend bool operator==(const RElement& a, const RElement& b) { return a.poly_ == b.poly_; }

  std::string to_string() const { return poly_.to_string(); }

 private:
  LaurentPoly poly_;
  bool reduced_ = false;
};

/// Applies the rewrite rules to a fixpoint.
RElement r_reduce(const RElement& x);

}  // namespace knotinv

#endif  // KNOTINV_RRING_HPP
