// Sparse multivariate Laurent polynomials with integer coefficients.
//
// All polynomials share one fixed variable layout (t, p, q, s, r, w, x1..x10);
// a VarSet records which of those variables a value may use and which of them
// are invertible. Operands of a binary operation must carry the same VarSet.

#ifndef KNOTINV_LAURENT_HPP
#define KNOTINV_LAURENT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knotinv/integer.hpp"

namespace knotinv {

enum class Var : std::uint8_t { t = 0, p = 1, q = 2, s = 3, r = 4, w = 5, x1 = 6 };

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxSideVars = kMaxVars - static_cast<int>(Var::x1);
inline constexpr int kMaxGenus = kMaxSideVars / 2;

constexpr int var_index(Var v) { return static_cast<int>(v); }
/// Side variable x_m, m in 1..10.
constexpr Var side_var(int m) { return static_cast<Var>(var_index(Var::x1) + m - 1); }
std::string var_name(int index);

using Exponents = std::array<std::int16_t, kMaxVars>;

class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr VarSet(std::uint16_t declared, std::uint16_t invertible)
      : declared_(declared), invertible_(invertible) {}

  /// Z[t±, q, p±, x1±..x2g±]
  static VarSet g_ring(int genus);
  /// Z[t±, q, p±, s±]
  static VarSet rprime_ring();
  /// Z[t±, q, p±, s±, r±, w]
  static VarSet r_ring();

  bool declares(int index) const { return (declared_ >> index) & 1U; }
  bool invertible(int index) const { return (invertible_ >> index) & 1U; }
  bool declares(Var v) const { return declares(var_index(v)); }
  /// Number of side variables x_m declared (2g for the G ring).
  int side_count() const;

  VarSet with(Var v, bool invertible) const;
  VarSet without(Var v) const;

  std::uint16_t declared_mask() const { return declared_; }
  std::uint16_t invertible_mask() const { return invertible_; }

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::uint16_t declared_ = 0;
  std::uint16_t invertible_ = 0;
};

struct Term {
  Exponents exp{};
  Integer coeff;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(VarSet vars) : vars_(vars) {}

  static LaurentPoly constant(VarSet vars, const Integer& c);
  static LaurentPoly monomial(VarSet vars, const Exponents& exp, const Integer& c = 1);
  static LaurentPoly variable(VarSet vars, Var v, int power = 1);

  VarSet vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  /// Coefficient of the given monomial (zero if absent).
  Integer coefficient(const Exponents& exp) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const Integer& c) const;
  /// Multiplies by the monomial x^exp (the exponents must be legal for vars()).
  LaurentPoly shifted(const Exponents& exp) const;
  LaurentPoly pow(unsigned n) const;

  /// Replaces every v^k by u^k (exponent moved from v onto u).
  LaurentPoly rename(Var v, Var u) const;
  /// Evaluates v at 1.
  LaurentPoly at_one(Var v) const;
  /// Re-tags the polynomial with another variable set; throws if a term is illegal there.
  LaurentPoly with_vars(VarSet vars) const;

  int min_exponent(Var v) const;
  int max_exponent(Var v) const;
  bool uses(Var v) const;

  /// Groups terms by the exponent of v; the keys' polynomials no longer mention v.
  std::map<int, LaurentPoly> split_by(Var v) const;

  /// Canonical text rendering (display order, see render.cpp).
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_.size() == b.terms_.size() && a.same_terms(b);
  }

  /// Adds c * x^exp in place.
  void add_term(const Exponents& exp, const Integer& c);

  /// Builds from unsorted terms (zero coefficients dropped, duplicates merged).
  static LaurentPoly from_terms(VarSet vars, std::vector<Term> terms);

 private:
  bool same_terms(const LaurentPoly& other) const;
  void check_same_vars(const LaurentPoly& rhs) const;
  void check_legal(const Exponents& exp) const;

  VarSet vars_;
  std::vector<Term> terms_;  // sorted by exp (lexicographic), no zero coefficients
};

/// Exponent vector helpers.
Exponents exponents_of(std::initializer_list<std::pair<Var, int>> powers);
Exponents add_exponents(const Exponents& a, const Exponents& b);
Exponents negate_exponents(const Exponents& a);

/// Display order: total degree, then lexicographic in variable order.
bool display_less(const Exponents& a, const Exponents& b);

/// Parses the canonical text rendering back into a polynomial over vars.
LaurentPoly parse_poly(std::string_view text, VarSet vars);

}  // namespace knotinv

#endif  // KNOTINV_LAURENT_HPP
