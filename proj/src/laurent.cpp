#include "knotinv/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "knotinv/errors.hpp"

namespace knotinv {

namespace {

constexpr std::uint16_t bit(Var v) { return static_cast<std::uint16_t>(1U << var_index(v)); }

std::uint16_t side_bits(int count) {
  std::uint16_t m = 0;
  for (int i = 1; i <= count; ++i) m |= bit(side_var(i));
  return m;
}

std::int16_t checked_exponent(long v) {
  if (v > std::numeric_limits<std::int16_t>::max() || v < std::numeric_limits<std::int16_t>::min()) {
    throw Error(ErrorCode::exponent_out_of_range, "exponent " + std::to_string(v));
  }
  return static_cast<std::int16_t>(v);
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

std::string var_name(int index) {
  static constexpr std::array<const char*, 6> names{"t", "p", "q", "s", "r", "w"};
  if (index < var_index(Var::x1)) return names[static_cast<std::size_t>(index)];
  return "x" + std::to_string(index - var_index(Var::x1) + 1);
}

VarSet VarSet::g_ring(int genus) {
  if (genus < 0 || genus > kMaxGenus) {
    throw Error(ErrorCode::genus_too_large, "genus " + std::to_string(genus) + " (supported: 0.." +
                                                std::to_string(kMaxGenus) + ")");
  }
  const std::uint16_t sides = side_bits(2 * genus);
  return {static_cast<std::uint16_t>(bit(Var::t) | bit(Var::p) | bit(Var::q) | sides),
          static_cast<std::uint16_t>(bit(Var::t) | bit(Var::p) | sides)};
}

VarSet VarSet::rprime_ring() {
  return {static_cast<std::uint16_t>(bit(Var::t) | bit(Var::p) | bit(Var::q) | bit(Var::s)),
          static_cast<std::uint16_t>(bit(Var::t) | bit(Var::p) | bit(Var::s))};
}

VarSet VarSet::r_ring() {
  return {static_cast<std::uint16_t>(bit(Var::t) | bit(Var::p) | bit(Var::q) | bit(Var::s) |
                                     bit(Var::r) | bit(Var::w)),
          static_cast<std::uint16_t>(bit(Var::t) | bit(Var::p) | bit(Var::s) | bit(Var::r))};
}

int VarSet::side_count() const {
  int n = 0;
  for (int i = var_index(Var::x1); i < kMaxVars; ++i) n += declares(i) ? 1 : 0;
  return n;
}

VarSet VarSet::with(Var v, bool inv) const {
  return {static_cast<std::uint16_t>(declared_ | bit(v)),
          static_cast<std::uint16_t>(inv ? (invertible_ | bit(v)) : (invertible_ & ~bit(v)))};
}

VarSet VarSet::without(Var v) const {
  return {static_cast<std::uint16_t>(declared_ & ~bit(v)),
          static_cast<std::uint16_t>(invertible_ & ~bit(v))};
}

Exponents exponents_of(std::initializer_list<std::pair<Var, int>> powers) {
  Exponents e{};
  for (const auto& [v, k] : powers) e[var_index(v)] = checked_exponent(e[var_index(v)] + k);
  return e;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents e;
  for (int i = 0; i < kMaxVars; ++i) e[i] = checked_exponent(long{a[i]} + b[i]);
  return e;
}

Exponents negate_exponents(const Exponents& a) {
  Exponents e;
  for (int i = 0; i < kMaxVars; ++i) e[i] = checked_exponent(-long{a[i]});
  return e;
}

bool display_less(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

// --- construction ---------------------------------------------------------

LaurentPoly LaurentPoly::constant(VarSet vars, const Integer& c) {
  LaurentPoly p(vars);
  if (!c.is_zero()) p.terms_.push_back({Exponents{}, c});
  return p;
}

LaurentPoly LaurentPoly::monomial(VarSet vars, const Exponents& exp, const Integer& c) {
  LaurentPoly p(vars);
  p.check_legal(exp);
  if (!c.is_zero()) p.terms_.push_back({exp, c});
  return p;
}

LaurentPoly LaurentPoly::variable(VarSet vars, Var v, int power) {
  return monomial(vars, exponents_of({{v, power}}));
}

LaurentPoly LaurentPoly::from_terms(VarSet vars, std::vector<Term> terms) {
  LaurentPoly p(vars);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == term.exp) {
      p.terms_.back().coeff += term.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!term.coeff.is_zero()) {
      p.check_legal(term.exp);
      p.terms_.push_back(std::move(term));
    }
  }
  return p;
}

void LaurentPoly::check_legal(const Exponents& exp) const {
  for (int i = 0; i < kMaxVars; ++i) {
    if (exp[i] == 0) continue;
    if (!vars_.declares(i)) {
      throw Error(ErrorCode::variable_set_mismatch, "variable " + var_name(i) + " not declared");
    }
    if (exp[i] < 0 && !vars_.invertible(i)) {
      throw Error(ErrorCode::exponent_out_of_range,
                  "negative exponent on non-invertible variable " + var_name(i));
    }
  }
}

void LaurentPoly::check_same_vars(const LaurentPoly& rhs) const {
  if (!(vars_ == rhs.vars_)) {
    throw Error(ErrorCode::variable_set_mismatch, "operands carry different variable sets");
  }
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == Exponents{} && terms_[0].coeff.is_one();
}

Integer LaurentPoly::coefficient(const Exponents& exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, const Exponents& e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

bool LaurentPoly::same_terms(const LaurentPoly& other) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exp != other.terms_[i].exp || !(terms_[i].coeff == other.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

void LaurentPoly::add_term(const Exponents& exp, const Integer& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, const Exponents& e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) {
    it->coeff += c;
    if (it->coeff.is_zero()) terms_.erase(it);
    return;
  }
  check_legal(exp);
  terms_.insert(it, Term{exp, c});
}

// --- arithmetic -----------------------------------------------------------

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_same_vars(rhs);
  if (rhs.terms_.empty()) return *this;
  if (&rhs == this) {
    *this = scaled(2);
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (!c.is_zero()) out.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_same_vars(rhs);
  if (&rhs == this) {
    terms_.clear();
    return *this;
  }
  return *this += -rhs;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.coeff = -term.coeff;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_vars(b);
  if (a.terms_.empty() || b.terms_.empty()) return LaurentPoly(a.vars_);
  const LaurentPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const LaurentPoly& big = a.terms_.size() <= b.terms_.size() ? b : a;
  if (small.terms_.size() == 1) {
    // Shifting preserves the lexicographic order, so no re-sort is needed.
    LaurentPoly out(a.vars_);
    out.terms_.reserve(big.terms_.size());
    const Term& m = small.terms_[0];
    for (const auto& term : big.terms_) {
      out.terms_.push_back({add_exponents(term.exp, m.exp), term.coeff * m.coeff});
    }
    return out;
  }
  std::vector<Term> products;
  products.reserve(small.terms_.size() * big.terms_.size());
  for (const auto& x : small.terms_) {
    for (const auto& y : big.terms_) {
      products.push_back({add_exponents(x.exp, y.exp), x.coeff * y.coeff});
    }
  }
  return LaurentPoly::from_terms(a.vars_, std::move(products));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c.is_zero()) return LaurentPoly(vars_);
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.coeff *= c;
  return p;
}

LaurentPoly LaurentPoly::shifted(const Exponents& exp) const {
  check_legal(exp);
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.exp = add_exponents(term.exp, exp);
  for (const auto& term : p.terms_) p.check_legal(term.exp);
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::rename(Var v, Var u) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    Term moved = term;
    moved.exp[var_index(u)] = checked_exponent(long{moved.exp[var_index(u)]} + moved.exp[var_index(v)]);
    moved.exp[var_index(v)] = 0;
    out.push_back(std::move(moved));
  }
  return from_terms(vars_, std::move(out));
}

LaurentPoly LaurentPoly::at_one(Var v) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    Term moved = term;
    moved.exp[var_index(v)] = 0;
    out.push_back(std::move(moved));
  }
  return from_terms(vars_, std::move(out));
}

LaurentPoly LaurentPoly::with_vars(VarSet vars) const {
  LaurentPoly p(vars);
  for (const auto& term : terms_) p.check_legal(term.exp);
  p.terms_ = terms_;
  return p;
}

int LaurentPoly::min_exponent(Var v) const {
  int m = std::numeric_limits<int>::max();
  for (const auto& term : terms_) m = std::min<int>(m, term.exp[var_index(v)]);
  return terms_.empty() ? 0 : m;
}

int LaurentPoly::max_exponent(Var v) const {
  int m = std::numeric_limits<int>::min();
  for (const auto& term : terms_) m = std::max<int>(m, term.exp[var_index(v)]);
  return terms_.empty() ? 0 : m;
}

bool LaurentPoly::uses(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const Term& term) { return term.exp[var_index(v)] != 0; });
}

std::map<int, LaurentPoly> LaurentPoly::split_by(Var v) const {
  std::map<int, LaurentPoly> parts;
  for (const auto& term : terms_) {
    const int k = term.exp[var_index(v)];
    Exponents e = term.exp;
    e[var_index(v)] = 0;
    auto [it, inserted] = parts.try_emplace(k, vars_);
    // Terms arrive in lexicographic order and dropping one coordinate keeps
    // the relative order within a fixed value of that coordinate.
    it->second.terms_.push_back({e, term.coeff});
  }
  return parts;
}

// --- text -----------------------------------------------------------------

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& term : terms_) order.push_back(&term);
  std::sort(order.begin(), order.end(),
            [](const Term* a, const Term* b) { return display_less(a->exp, b->exp); });

  std::string out;
  bool first = true;
  for (const Term* term : order) {
    const bool negative = term->coeff.sign() < 0;
    const Integer magnitude = negative ? -term->coeff : term->coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      const int k = term->exp[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i);
      if (k != 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += mono;
    } else {
      out += magnitude.to_string() + "*" + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, VarSet vars) : text_(text), vars_(vars) {}

  LaurentPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(parse_term(sign));
      skip_ws();
    }
    return LaurentPoly::from_terms(vars_, std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    Term term;
    term.coeff = sign;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coeff *= Integer::from_string(read_digits());
      have_factor = true;
      skip_ws();
      if (peek() != '*') return term;
      get();
      skip_ws();
    }
    while (true) {
      const int index = read_var();
      int power = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        skip_ws();
        std::string digits;
        if (peek() == '-' || peek() == '+') digits += get();
        digits += read_digits();
        power = std::stoi(digits);
      }
      term.exp[index] = checked_exponent(long{term.exp[index]} + power);
      have_factor = true;
      skip_ws();
      if (peek() != '*') break;
      get();
      skip_ws();
    }
    if (!have_factor) fail("empty term");
    return term;
  }

  int read_var() {
    const char c = get();
    static constexpr std::string_view base = "tpqsrw";
    if (auto pos = base.find(c); pos != std::string_view::npos) return static_cast<int>(pos);
    if (c == 'x') {
      const int m = std::stoi(read_digits());
      if (m < 1 || m > kMaxSideVars) fail("side variable out of range");
      return var_index(side_var(m));
    }
    fail(std::string("unknown variable '") + c + "'");
  }

  std::string read_digits() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (digits.empty()) fail("expected digits");
    return digits;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::malformed_polynomial,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() {
    if (at_end()) fail("unexpected end");
    return text_[pos_++];
  }

  std::string_view text_;
  VarSet vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, VarSet vars) { return PolyParser(text, vars).parse(); }

}  // namespace knotinv
