#include "knotinv/rring.hpp"

#include <optional>
#include <stdexcept>

#include "knotinv/errors.hpp"

namespace knotinv {

namespace {

constexpr int kT = var_index(Var::t);
constexpr int kP = var_index(Var::p);
constexpr int kQ = var_index(Var::q);
constexpr int kS = var_index(Var::s);
constexpr int kR = var_index(Var::r);
constexpr int kW = var_index(Var::w);

LaurentPoly mono(const Exponents& e, const Integer& c) {
  return LaurentPoly::monomial(VarSet::r_ring(), e, c);
}

// Rewrites a single term, or returns nullopt if no rule applies.
std::optional<LaurentPoly> rewrite_term(const Term& term) {
  const VarSet vars = VarSet::r_ring();
  Exponents e = term.exp;
  const Integer& c = term.coeff;
  const LaurentPoly one = LaurentPoly::constant(vars, 1);
  const LaurentPoly t = LaurentPoly::variable(vars, Var::t);

  if (e[kQ] >= 1 && e[kP] != 0) {
    e[kT] = static_cast<std::int16_t>(e[kT] + e[kP]);
    e[kP] = 0;
    return mono(e, c);
  }
  if (e[kQ] >= 2) {
    e[kQ] = static_cast<std::int16_t>(e[kQ] - 2);
    return mono(e, c) * ((one - t) * (one - LaurentPoly::variable(vars, Var::p)));
  }
  if (e[kW] >= 1) {
    if (e[kS] != 0) {
      e[kS] = 0;
      return mono(e, c);
    }
    if (e[kR] != 0) {
      e[kT] = static_cast<std::int16_t>(e[kT] + e[kR]);
      e[kR] = 0;
      return mono(e, c);
    }
    if (e[kP] != 0) {
      e[kT] = static_cast<std::int16_t>(e[kT] + e[kP]);
      e[kP] = 0;
      return mono(e, c);
    }
    if (e[kQ] >= 1) {
      e[kQ] = static_cast<std::int16_t>(e[kQ] - 1);
      return mono(e, c) * (one - t);
    }
    if (e[kW] >= 2) {
      e[kW] = static_cast<std::int16_t>(e[kW] - 2);
      const LaurentPoly rs = LaurentPoly::monomial(vars, exponents_of({{Var::r, 1}, {Var::s, 1}}));
      return mono(e, c) * ((one - t) * (one - rs));
    }
  }
  if (e[kR] >= 1 && e[kS] >= 1 && e[kQ] >= 1) {
    e[kR] = static_cast<std::int16_t>(e[kR] - 1);
    e[kS] = static_cast<std::int16_t>(e[kS] - 1);
    e[kQ] = static_cast<std::int16_t>(e[kQ] - 1);
    const LaurentPoly q = LaurentPoly::variable(vars, Var::q);
    const LaurentPoly rs = LaurentPoly::monomial(vars, exponents_of({{Var::r, 1}, {Var::s, 1}}));
    return mono(e, c) * (q - (one - t) + rs * (one - t));
  }
  return std::nullopt;
}

}  // namespace

RElement::RElement(LaurentPoly poly, bool reduced) : poly_(std::move(poly)), reduced_(reduced) {
  if (!(poly_.vars() == VarSet::r_ring())) {
    throw Error(ErrorCode::variable_set_mismatch, "R elements use the R variable set");
  }
}

RElement RElement::from_integer(const Integer& c) {
  return RElement(LaurentPoly::constant(VarSet::r_ring(), c), true);
}

RElement RElement::variable(Var v, int power) {
  return RElement(LaurentPoly::variable(VarSet::r_ring(), v, power));
}

RElement& RElement::operator+=(const RElement& rhs) {
  poly_ += rhs.poly_;
  reduced_ = false;
  return *this;
}

RElement RElement::operator-() const { return RElement(-poly_, reduced_); }

RElement operator*(const RElement& a, const RElement& b) { return RElement(a.poly_ * b.poly_); }

RElement r_reduce(const RElement& x) {
  // Every rule lowers (w-degree, q-degree, |p|, |r|, |s|) in a well-founded way
  // on the rewritten term; the bound only guards against a bug.
  constexpr int kMaxPasses = 100000;
  LaurentPoly current = x.poly();
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    LaurentPoly next(VarSet::r_ring());
    bool changed = false;
    for (const auto& term : current.terms()) {
      if (auto rewritten = rewrite_term(term)) {
        next += *rewritten;
        changed = true;
      } else {
        next.add_term(term.exp, term.coeff);
      }
    }
    if (!changed) return RElement(std::move(current), true);
    current = std::move(next);
  }
  throw std::logic_error("r_reduce did not reach a fixpoint");
}

}  // namespace knotinv
