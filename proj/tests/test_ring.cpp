#include <random>

#include "doctest.h"
#include "knotinv/errors.hpp"
#include "knotinv/integer.hpp"
#include "knotinv/laurent.hpp"
#include "knotinv/quotient.hpp"
#include "knotinv/rring.hpp"
#include "oracles.hpp"

using namespace knotinv;
using oracle::P;
using oracle::Q;

namespace {

const VarSet G1 = VarSet::g_ring(1);
const VarSet RP = VarSet::rprime_ring();
const VarSet RR = VarSet::r_ring();

RElement R(std::string_view text) { return RElement(parse_poly(text, RR)); }

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("no error thrown");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("Integer promotes past int64 and demotes back") {
  const Integer big = Integer(INT64_MAX) + Integer(1);
  CHECK_FALSE(big.is_small());
  CHECK(big.to_string() == "9223372036854775808");
  const Integer back = big - Integer(1);
  CHECK(back.is_small());
  CHECK(back == Integer(INT64_MAX));
  CHECK(Integer(INT64_MIN) * Integer(-1) == Integer::from_string("9223372036854775808"));
  CHECK((Integer(-3) <=> Integer(2)) < 0);
}

TEST_CASE("Laurent polynomial arithmetic") {
  SUBCASE("(1 - t)(1 - p)") {
    CHECK(P(G1, "1 - t") * P(G1, "1 - p") == P(G1, "1 - t - p + t*p"));
  }
  SUBCASE("a + 0 = a") {
    const LaurentPoly a = P(G1, "t^2 - 3*x1*p^-1");
    CHECK(a + LaurentPoly(G1) == a);
  }
  SUBCASE("difference of squares with a side variable") {
    CHECK(P(G1, "t + x1^-1") * P(G1, "t - x1^-1") == P(G1, "t^2 - x1^-2"));
  }
  SUBCASE("zero coefficients are pruned") {
    const LaurentPoly z = P(G1, "t") - P(G1, "t");
    CHECK(z.is_zero());
    CHECK(z.size() == 0);
  }
  SUBCASE("render and parse round-trip") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
      const LaurentPoly a = oracle::random_poly(VarSet::g_ring(2), rng);
      if (a.is_zero()) continue;
      CHECK(parse_poly(a.to_string(), a.vars()) == a);
    }
  }
  SUBCASE("display order: total degree first") {
    CHECK(P(G1, "t^2 + 1 + t").to_string() == "1 + t + t^2");
  }
}

TEST_CASE("Laurent errors") {
  expect_error(ErrorCode::variable_set_mismatch, [] { (void)(P(G1, "t") + P(RP, "t")); });
  expect_error(ErrorCode::exponent_out_of_range, [] { (void)P(G1, "q^-1"); });
  expect_error(ErrorCode::malformed_polynomial, [] { (void)P(G1, "t +"); });
}

TEST_CASE("G relations") {
  SUBCASE("q p -> t q") {
    const QuotientElement x = Q(G1, "q*p");
    CHECK(x.a_part().is_zero());
    CHECK(x.b_part() == P(G1, "t"));
  }
  SUBCASE("q^2 -> (1 - t)(1 - p)") {
    const QuotientElement x = Q(G1, "q^2");
    CHECK(x.b_part().is_zero());
    CHECK(x == Q(G1, "1 - t - p + t*p"));
  }
  SUBCASE("(1 + q)(1 - q) = t + p - tp") {
    CHECK(Q(G1, "1 + q") * Q(G1, "1 - q") == Q(G1, "t + p - t*p"));
  }
  SUBCASE("h vanishes") {
    CHECK(QuotientElement::normalize(P(G1, "1 - t") * P(G1, "1 - p") * P(G1, "p - t")).is_zero());
  }
  SUBCASE("relations as differences") {
    CHECK(Q(G1, "q*p - q*t").is_zero());
    CHECK((Q(G1, "q") * Q(G1, "q") - Q(G1, "1 - t - p + t*p")).is_zero());
  }
}

TEST_CASE("R' relations") {
  CHECK(Q(RP, "s*q*p") == Q(RP, "s*t*q"));
  CHECK(Q(RP, "q^2*s^-1") == Q(RP, "s^-1 - t*s^-1 - p*s^-1 + t*p*s^-1"));
}

TEST_CASE("quotient multiplication follows the (A1 + B1 q)(A2 + B2 q) formula") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const VarSet vars = k % 2 == 0 ? G1 : RP;
    const QuotientElement x = oracle::random_element(vars, rng);
    const QuotientElement y = oracle::random_element(vars, rng);
    const LaurentPoly one_minus = P(vars, "1 - t") * P(vars, "1 - p");
    const LaurentPoly a = x.a_part() * y.a_part() + x.b_part() * y.b_part() * one_minus;
    const LaurentPoly b = x.a_part().rename(Var::p, Var::t) * y.b_part() + y.a_part().rename(Var::p, Var::t) * x.b_part();
    CHECK(x * y == QuotientElement::from_parts(a, b));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(2024);
  for (const VarSet vars : {VarSet::g_ring(2), RP}) {
    for (int k = 0; k < 150; ++k) {
      const QuotientElement a = oracle::random_element(vars, rng);
      const QuotientElement b = oracle::random_element(vars, rng);
      const QuotientElement c = oracle::random_element(vars, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + a.zero_like() == a);
      CHECK(a * a.one_like() == a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("normalize agrees with the rewrite oracle and is a homomorphism") {
  std::mt19937_64 rng(99);
  for (const VarSet vars : {VarSet::g_ring(1), VarSet::g_ring(2), RP}) {
    for (int k = 0; k < 150; ++k) {
      const LaurentPoly x = oracle::random_poly(vars, rng, 5);
      const LaurentPoly y = oracle::random_poly(vars, rng, 5);
      CHECK(oracle::normal_form_matches(x));
      CHECK(QuotientElement::normalize(x * y) == QuotientElement::normalize(x) * QuotientElement::normalize(y));
      CHECK(QuotientElement::normalize(x + y) == QuotientElement::normalize(x) + QuotientElement::normalize(y));
      const QuotientElement n = QuotientElement::normalize(x);
      CHECK(QuotientElement::normalize(n.expanded()) == n);
    }
  }
}

TEST_CASE("the divisibility oracle is not vacuous") {
  CHECK(oracle::divisible_by_h(P(G1, "1 - t") * P(G1, "1 - p") * P(G1, "p - t") * P(G1, "x1 + 3*t^-2")));
  CHECK_FALSE(oracle::divisible_by_h(P(G1, "1 - t") * P(G1, "1 - p")));
  CHECK_FALSE(oracle::divisible_by_h(P(G1, "p - t")));
}

TEST_CASE("reduce_mod_h is idempotent and respects the ideal") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const LaurentPoly a = oracle::random_poly(G1.without(Var::q), rng, 6);
    const LaurentPoly r = reduce_mod_h(a);
    CHECK(reduce_mod_h(r) == r);
    CHECK(oracle::divisible_by_h(a - r));
    CHECK(r.max_exponent(Var::p) <= 2);
  }
}

TEST_CASE("evaluation maps are ring homomorphisms") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    const QuotientElement a = oracle::random_element(G1, rng);
    const QuotientElement b = oracle::random_element(G1, rng);
    CHECK((a * b).image_p_one() == a.image_p_one() * b.image_p_one());
    CHECK((a * b).image_t_one() == a.image_t_one() * b.image_t_one());
    CHECK((a * b).image_p_equals_t() == a.image_p_equals_t() * b.image_p_equals_t());
  }
}

TEST_CASE("quotient text round-trip") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 100; ++k) {
    const QuotientElement a = oracle::random_element(G1, rng);
    if (a.is_zero()) continue;
    CHECK(parse_quotient(a.to_string(), G1) == a);
  }
  CHECK(ring_name(G1) == "G(g=1)");
  CHECK(ring_name(RP) == "R'");
}

TEST_CASE("r_reduce examples") {
  CHECK(r_reduce(R("w*s")) == R("w"));
  CHECK(r_reduce(R("w*p")) == R("w*t"));
  CHECK(r_reduce(R("w*q")) == r_reduce(R("w - w*t")));
  CHECK(r_reduce(R("q*p")) == R("q*t"));
}

TEST_CASE("r_reduce sends every relation to zero") {
  const char* relations[] = {
      "q*p - q*t",
      "q^2 - 1 + t + p - t*p",
      "w - w*s",
      "w*t - w*r",
      "w^2 - 1 + t + r*s - t*r*s",
      "w*p*s + w*q - w",
      "w*r + w*q - w",
      "w*p - w*r",
      "w^2 - q + q*r*s",
  };
  for (const char* text : relations) {
    CAPTURE(text);
    CHECK(r_reduce(R(text)).is_zero());
  }
}

TEST_CASE("r_reduce is idempotent") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    const RElement x(oracle::random_poly(RR, rng, 5));
    const RElement once = r_reduce(x);
    CHECK(r_reduce(once) == once);
    CHECK(once.reduced());
  }
}

TEST_CASE("type-0 transfer matrices are mutually inverse in R") {
  // Positive: (u_out, o_out) = [[s, 0], [w, r]] (u_in, o_in); negative is the inverse.
  const RElement zero, one = RElement::from_integer(1);
  const RElement plus[2][2] = {{R("s"), zero}, {R("w"), R("r")}};
  const RElement minus[2][2] = {{R("s^-1"), zero}, {R("-w*t^-1"), R("r^-1")}};
  auto product = [](const RElement (&x)[2][2], const RElement (&y)[2][2], int i, int j) {
    return r_reduce(x[i][0] * y[0][j] + x[i][1] * y[1][j]);
  };
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const RElement expected = i == j ? one : zero;
      CHECK(product(minus, plus, i, j) == expected);
      CHECK(product(plus, minus, i, j) == expected);
    }
  }
}
