#include "knotinv/quotient.hpp"

#include "knotinv/errors.hpp"

namespace knotinv {

namespace {

void require_quotient_vars(VarSet vars) {
  if (!vars.declares(Var::t) || !vars.declares(Var::p) || !vars.declares(Var::q) ||
      vars.declares(Var::r) || vars.declares(Var::w)) {
    throw Error(ErrorCode::variable_set_mismatch, "not a G/R' variable set");
  }
}

// (1 - t)(1 - p)
LaurentPoly q_squared(VarSet vars) {
  const LaurentPoly one = LaurentPoly::constant(vars, 1);
  return (one - LaurentPoly::variable(vars, Var::t)) * (one - LaurentPoly::variable(vars, Var::p));
}

LaurentPoly p_power(VarSet vars, int k) { return LaurentPoly::variable(vars, Var::p, k); }

}  // namespace

LaurentPoly reduce_mod_h(const LaurentPoly& a) {
  const VarSet vars = a.vars();
  if (a.is_zero()) return a;
  const int lo = a.min_exponent(Var::p);
  const int hi = a.max_exponent(Var::p);
  if (lo >= 0 && hi <= 1) return a;

  const LaurentPoly t = LaurentPoly::variable(vars, Var::t);
  const LaurentPoly t_inv = LaurentPoly::variable(vars, Var::t, -1);
  const LaurentPoly one_plus_t = LaurentPoly::constant(vars, 1) + t;
  const LaurentPoly one_plus_t_inv = LaurentPoly::constant(vars, 1) + t_inv;

  std::map<int, LaurentPoly> coef = a.split_by(Var::p);
  std::map<int, LaurentPoly> quotient;
  auto slot = [&vars](std::map<int, LaurentPoly>& m, int k) -> LaurentPoly& {
    return m.try_emplace(k, vars).first->second;
  };

  // g = p^2 - (1 + t) p + t is monic with unit constant term, so every p^k
  // folds into degrees {0, 1}.
  for (int k = hi; k >= 2; --k) {
    auto it = coef.find(k);
    if (it == coef.end() || it->second.is_zero()) continue;
    const LaurentPoly c = std::move(it->second);
    coef.erase(it);
    slot(coef, k - 1) += one_plus_t * c;
    slot(coef, k - 2) -= t * c;
    slot(quotient, k - 2) += c;
  }
  for (int k = lo; k <= -1; ++k) {
    auto it = coef.find(k);
    if (it == coef.end() || it->second.is_zero()) continue;
    const LaurentPoly c = std::move(it->second);
    coef.erase(it);
    slot(coef, k + 1) += one_plus_t_inv * c;
    slot(coef, k + 2) -= t_inv * c;
    slot(quotient, k) += t_inv * c;
  }

  LaurentPoly result(vars);
  for (const auto& [k, c] : coef) result += c * p_power(vars, k);
  LaurentPoly q_at_one(vars);
  for (const auto& [k, c] : quotient) q_at_one += c.at_one(Var::t) * p_power(vars, k);
  if (!q_at_one.is_zero()) {
    const LaurentPoly one = LaurentPoly::constant(vars, 1);
    const LaurentPoly p = LaurentPoly::variable(vars, Var::p);
    result += q_at_one * ((p - one) * (p - t));
  }
  return result;
}

QuotientElement::QuotientElement(VarSet vars) : vars_(vars), a_(vars), b_(vars) {
  require_quotient_vars(vars);
}

QuotientElement QuotientElement::one(VarSet vars) { return from_integer(vars, 1); }

QuotientElement QuotientElement::from_integer(VarSet vars, const Integer& c) {
  QuotientElement e(vars);
  e.a_ = LaurentPoly::constant(vars, c);
  return e;
}

QuotientElement QuotientElement::from_parts(const LaurentPoly& a, const LaurentPoly& b) {
  return normalize(a + b * LaurentPoly::variable(a.vars(), Var::q));
}

QuotientElement QuotientElement::normalize(const LaurentPoly& raw) {
  const VarSet vars = raw.vars();
  require_quotient_vars(vars);
  const LaurentPoly c = q_squared(vars);
  LaurentPoly a(vars);
  LaurentPoly b(vars);
  for (const auto& [k, part] : raw.split_by(Var::q)) {
    // q^k = c^(k/2) or q * c^((k-1)/2)
    const auto half = static_cast<unsigned>(k / 2);
    if (k % 2 == 0) {
      a += part * c.pow(half);
    } else {
      b += part * c.pow(half);
    }
  }
  return QuotientElement(vars, reduce_mod_h(a), b.rename(Var::p, Var::t));
}

QuotientElement& QuotientElement::operator+=(const QuotientElement& rhs) {
  // The canonical representatives form an additive subgroup, so sums stay canonical.
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuotientElement& QuotientElement::operator-=(const QuotientElement& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuotientElement QuotientElement::operator-() const { return QuotientElement(vars_, -a_, -b_); }

QuotientElement operator*(const QuotientElement& x, const QuotientElement& y) {
  if (!(x.vars_ == y.vars_)) {
    throw Error(ErrorCode::variable_set_mismatch, "quotient elements from different rings");
  }
  const VarSet vars = x.vars_;
  if (x.is_zero() || y.is_zero()) return QuotientElement(vars);
  // (A1 + B1 q)(A2 + B2 q) = A1 A2 + B1 B2 (1-t)(1-p) + q (A1|p=t B2 + A2|p=t B1)
  LaurentPoly a = x.a_ * y.a_;
  if (!x.b_.is_zero() && !y.b_.is_zero()) a += (x.b_ * y.b_) * q_squared(vars);
  LaurentPoly b(vars);
  if (!y.b_.is_zero()) b += x.a_.rename(Var::p, Var::t) * y.b_;
  if (!x.b_.is_zero()) b += y.a_.rename(Var::p, Var::t) * x.b_;
  return QuotientElement(vars, reduce_mod_h(a), std::move(b));
}

QuotientElement QuotientElement::times_unit(int sign, int alpha, int beta) const {
  const Exponents ab = exponents_of({{Var::t, alpha}, {Var::p, beta}});
  const Exponents b_shift = exponents_of({{Var::t, alpha + beta}});
  LaurentPoly a = a_.shifted(ab);
  LaurentPoly b = b_.shifted(b_shift);
  if (sign < 0) {
    a = -a;
    b = -b;
  }
  return QuotientElement(vars_, reduce_mod_h(a), std::move(b));
}

QuotientElement QuotientElement::times_q() const {
  // q (A + B q) = B (1-t)(1-p) + q A|p=t
  return QuotientElement(vars_, reduce_mod_h(b_ * q_squared(vars_)), a_.rename(Var::p, Var::t));
}

LaurentPoly QuotientElement::image_p_one() const { return a_.at_one(Var::p); }

LaurentPoly QuotientElement::image_t_one() const { return a_.at_one(Var::t); }

LaurentPoly QuotientElement::image_p_equals_t() const {
  const LaurentPoly one_minus_t =
      LaurentPoly::constant(vars_, 1) - LaurentPoly::variable(vars_, Var::t);
  return a_.rename(Var::p, Var::t) + b_ * one_minus_t;
}

LaurentPoly QuotientElement::expanded() const {
  return a_ + b_ * LaurentPoly::variable(vars_, Var::q);
}

QuotientElement parse_quotient(std::string_view text, VarSet vars) {
  return QuotientElement::normalize(parse_poly(text, vars));
}

std::string ring_name(VarSet vars) {
  if (vars.declares(Var::r)) return "R";
  if (vars.declares(Var::s)) return "R'";
  return "G(g=" + std::to_string(vars.side_count() / 2) + ")";
}

}  // namespace knotinv
