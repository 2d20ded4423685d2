// The determinant invariants s(K) over G and n'(K) over R', their
// normalization up to units +-t^a p^b, and comparison up to +-t^a p^b q^c.

#ifndef KNOTINV_INVARIANT_HPP
#define KNOTINV_INVARIANT_HPP

#include <string>
#include <vector>

#include "knotinv/diagram.hpp"
#include "knotinv/matrices.hpp"
#include "knotinv/quotient.hpp"

namespace knotinv {

/// The unit sign * t^alpha * p^beta * q^gamma.
struct UnitRecord {
  int sign = 1;
  int alpha = 0;
  int beta = 0;
  int gamma = 0;

  std::string to_string() const;
  friend bool operator==(const UnitRecord&, const UnitRecord&) = default;
};

struct InvariantValue {
  QuotientElement canonical;
  /// canonical = sign * t^-alpha * p^-beta * (determinant), gamma unused.
  UnitRecord normalization;
  /// False when the shifts could not be read off (the value lies in the
  /// kernel of the evaluation maps); comparison then falls back to search.
  bool resolved = true;

  VarSet ring() const { return canonical.vars(); }
};

/// Shifts x so that its images under p -> 1 and t -> 1 have lowest t- and
/// p-degree 0, and makes the first coefficient in display order positive.
InvariantValue canonicalize(const QuotientElement& x);

InvariantValue s_invariant(const Diagram& d);
/// s computed from the matrix with degree-2 vertices at the given token gaps.
InvariantValue s_invariant_subdivided(const Diagram& d, const std::vector<int>& gaps);
InvariantValue nprime_invariant(const Diagram& d);

enum class Verdict : unsigned char { equivalent, distinct, inconclusive };
std::string_view verdict_name(Verdict v);

struct ComparisonResult {
  Verdict verdict = Verdict::inconclusive;
  /// When equivalent: b = unit * a, or a = unit * b if swapped.
  UnitRecord unit;
  bool swapped = false;
};

/// Throws RingMismatch when the values live in different rings.
ComparisonResult compare(const InvariantValue& a, const InvariantValue& b);
ComparisonResult compare(const QuotientElement& a, const QuotientElement& b);

Presentation n_presentation(const Diagram& d);

}  // namespace knotinv

#endif  // KNOTINV_INVARIANT_HPP
