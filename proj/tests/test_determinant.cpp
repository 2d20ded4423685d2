#include <random>

#include "doctest.h"
#include "knotinv/determinant.hpp"
#include "knotinv/errors.hpp"
#include "oracles.hpp"

using namespace knotinv;
using oracle::Q;

namespace {

const VarSet G1 = VarSet::g_ring(1);

Matrix<QuotientElement> identity(VarSet vars, std::size_t n) {
  Matrix<QuotientElement> m(n, n, QuotientElement::zero(vars));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = QuotientElement::one(vars);
  return m;
}

}  // namespace

TEST_CASE("small determinants") {
  Matrix<QuotientElement> one(1, 1, QuotientElement::zero(G1));
  one(0, 0) = Q(G1, "t + q*x1");
  CHECK(det_berkowitz(one) == one(0, 0));
  CHECK(det_sparse(one) == one(0, 0));

  Matrix<QuotientElement> two(2, 2, QuotientElement::zero(G1));
  two(0, 0) = Q(G1, "t");
  two(0, 1) = Q(G1, "q");
  two(1, 0) = Q(G1, "q");
  two(1, 1) = Q(G1, "p");
  const QuotientElement expected = Q(G1, "t*p - q^2");
  CHECK(det_berkowitz(two) == expected);
  CHECK(det_sparse(two) == expected);
}

TEST_CASE("identity has determinant one for sizes 0..8") {
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(det_berkowitz(identity(G1, n)).is_one());
    CHECK(det_sparse(identity(G1, n)).is_one());
  }
}

TEST_CASE("division-free determinants match cofactor expansion") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 6);
    const VarSet vars = k % 3 == 0 ? VarSet::rprime_ring() : VarSet::g_ring(1 + k % 2);
    const auto m = oracle::random_matrix(vars, n, rng, n > 4 ? 2 : 3);
    const QuotientElement expected = oracle::cofactor_det(m);
    CHECK(det_berkowitz(m) == expected);
    CHECK(det_sparse(m) == expected);
  }
}

TEST_CASE("swapping two rows negates the determinant") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    auto m = oracle::random_matrix(G1, 5, rng, 2);
    const QuotientElement before = det_berkowitz(m);
    m.swap_rows(static_cast<std::size_t>(k % 5), static_cast<std::size_t>((k + 2) % 5));
    CHECK(det_berkowitz(m) == -before);
    CHECK(det_sparse(m) == -before);
  }
}

TEST_CASE("permuting rows and columns together keeps the determinant") {
  std::mt19937_64 rng(6);
  auto m = oracle::random_matrix(G1, 4, rng, 2);
  const std::vector<std::size_t> perm{2, 0, 3, 1};
  CHECK(det_sparse(m.permuted(perm, perm)) == det_sparse(m));
}

TEST_CASE("non-square input is rejected") {
  Matrix<QuotientElement> m(2, 3, QuotientElement::zero(G1));
  CHECK_THROWS_AS(det_berkowitz(m), Error);
  try {
    (void)det_sparse(m);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_square);
  }
}
