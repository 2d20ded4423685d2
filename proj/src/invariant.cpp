#include "knotinv/invariant.hpp"

#include <algorithm>
#include <optional>

#include "knotinv/errors.hpp"
#include "knotinv/parity.hpp"

namespace knotinv {

namespace {

// Search window for shifts that the evaluation maps leave undetermined.
constexpr int kSearchWindow = 12;

int first_sign(const LaurentPoly& p) {
  const auto& terms = p.terms();
  const auto it = std::min_element(terms.begin(), terms.end(),
                                   [](const Term& a, const Term& b) { return display_less(a.exp, b.exp); });
  return it->coeff.sign();
}

// Sign s with y == s * x * t^shift (in variable v), or 0.
int matching_sign(const LaurentPoly& y, const LaurentPoly& x, Var v, int shift) {
  Exponents e{};
  e[static_cast<std::size_t>(var_index(v))] = static_cast<std::int16_t>(shift);
  const LaurentPoly moved = x.shifted(e);
  if (y == moved) return 1;
  if (y == -moved) return -1;
  return 0;
}

enum class Outcome { found, refuted, unknown };

struct Attempt {
  Outcome outcome = Outcome::refuted;
  UnitRecord unit;
};

// Looks for y = sign * t^alpha * p^beta * x.
Attempt match_units(const QuotientElement& y, const QuotientElement& x) {
  if (y.is_zero() != x.is_zero()) return {};
  if (y.is_zero()) return {Outcome::found, {}};

  const LaurentPoly y1 = y.image_p_one(), x1 = x.image_p_one();
  const LaurentPoly y2 = y.image_t_one(), x2 = x.image_t_one();
  const LaurentPoly y3 = y.image_p_equals_t(), x3 = x.image_p_equals_t();
  if (y1.is_zero() != x1.is_zero() || y2.is_zero() != x2.is_zero() || y3.is_zero() != x3.is_zero()) return {};

  std::optional<int> alpha, beta, total;
  std::vector<int> signs{1, -1};
  auto restrict_sign = [&signs](int s) {
    std::erase_if(signs, [s](int c) { return c != s; });
  };
  if (!y1.is_zero()) {
    alpha = y1.min_exponent(Var::t) - x1.min_exponent(Var::t);
    const int s = matching_sign(y1, x1, Var::t, *alpha);
    if (s == 0) return {};
    restrict_sign(s);
  }
  if (!y2.is_zero()) {
    beta = y2.min_exponent(Var::p) - x2.min_exponent(Var::p);
    const int s = matching_sign(y2, x2, Var::p, *beta);
    if (s == 0) return {};
    restrict_sign(s);
  }
  if (!y3.is_zero()) {
    total = y3.min_exponent(Var::t) - x3.min_exponent(Var::t);
    const int s = matching_sign(y3, x3, Var::t, *total);
    if (s == 0) return {};
    restrict_sign(s);
  }
  if (signs.empty()) return {};
  if (total) {
    if (alpha && beta && *alpha + *beta != *total) return {};
    if (alpha && !beta) beta = *total - *alpha;
    if (beta && !alpha) alpha = *total - *beta;
  }

  auto check = [&](int a, int b) -> std::optional<UnitRecord> {
    for (int s : signs) {
      if (x.times_unit(s, a, b) == y) return UnitRecord{s, a, b, 0};
    }
    return std::nullopt;
  };
  if (alpha && beta) {
    if (auto u = check(*alpha, *beta)) return {Outcome::found, *u};
    return {};
  }
  for (int a = -kSearchWindow; a <= kSearchWindow; ++a) {
    if (alpha && a != *alpha) continue;
    for (int b = -kSearchWindow; b <= kSearchWindow; ++b) {
      if (beta && b != *beta) continue;
      if (total && a + b != *total) continue;
      if (auto u = check(a, b)) return {Outcome::found, *u};
    }
  }
  return {Outcome::unknown, {}};
}

}  // namespace

std::string UnitRecord::to_string() const {
  std::string out = sign > 0 ? "+" : "-";
  bool any = false;
  auto factor = [&](const char* name, int power) {
    if (power == 0) return;
    if (any) out += "*";
    out += name;
    if (power != 1) out += "^" + std::to_string(power);
    any = true;
  };
  factor("t", alpha);
  factor("p", beta);
  factor("q", gamma);
  if (!any) out += "1";
  return out;
}

InvariantValue canonicalize(const QuotientElement& x) {
  InvariantValue value;
  if (x.is_zero()) {
    value.canonical = x;
    return value;
  }
  const LaurentPoly f1 = x.image_p_one();
  const LaurentPoly f2 = x.image_t_one();
  const LaurentPoly f3 = x.image_p_equals_t();
  std::optional<int> alpha, beta;
  if (!f1.is_zero()) alpha = f1.min_exponent(Var::t);
  if (!f2.is_zero()) beta = f2.min_exponent(Var::p);
  if (!f3.is_zero()) {
    const int total = f3.min_exponent(Var::t);
    if (alpha && !beta) beta = total - *alpha;
    if (beta && !alpha) alpha = total - *beta;
    if (!alpha && !beta) {
      alpha = total;
      value.resolved = false;
    }
  }
  if (!alpha || !beta) value.resolved = false;
  const int a = alpha.value_or(0);
  const int b = beta.value_or(0);
  QuotientElement shifted = x.times_unit(1, -a, -b);
  const int sign = first_sign(shifted.expanded());
  if (sign < 0) shifted = -shifted;
  value.canonical = std::move(shifted);
  value.normalization = {sign, a, b, 0};
  return value;
}

InvariantValue s_invariant(const Diagram& d) { return s_invariant_subdivided(d, {}); }

InvariantValue s_invariant_subdivided(const Diagram& d, const std::vector<int>& gaps) {
  return canonicalize(det_sparse(build_M(d, gaussian_parity(d), gaps)));
}

InvariantValue nprime_invariant(const Diagram& d) {
  return canonicalize(det_sparse(build_Npp(d, hierarchy_types(d)).matrix));
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::equivalent:
      return "EquivalentUpToUnits";
    case Verdict::distinct:
      return "Distinct";
    case Verdict::inconclusive:
      return "Inconclusive";
  }
  return "?";
}

ComparisonResult compare(const InvariantValue& a, const InvariantValue& b) {
  return compare(a.canonical, b.canonical);
}

ComparisonResult compare(const QuotientElement& a, const QuotientElement& b) {
  if (!(a.vars() == b.vars())) {
    throw Error(ErrorCode::ring_mismatch, ring_name(a.vars()) + " vs " + ring_name(b.vars()));
  }
  if (a.is_zero() || b.is_zero()) {
    return {a.is_zero() && b.is_zero() ? Verdict::equivalent : Verdict::distinct, {}, false};
  }
  bool unknown = false;
  for (const bool swapped : {false, true}) {
    const QuotientElement& y = swapped ? a : b;
    const QuotientElement& x = swapped ? b : a;
    for (int gamma = 0; gamma <= 1; ++gamma) {
      const Attempt attempt = match_units(y, gamma == 0 ? x : x.times_q());
      if (attempt.outcome == Outcome::found) {
        UnitRecord unit = attempt.unit;
        unit.gamma = gamma;
        return {Verdict::equivalent, unit, swapped};
      }
      if (attempt.outcome == Outcome::unknown) unknown = true;
    }
  }
  return {unknown ? Verdict::inconclusive : Verdict::distinct, {}, false};
}

Presentation n_presentation(const Diagram& d) { return build_N_presentation(d, hierarchy_types(d)); }

}  // namespace knotinv
