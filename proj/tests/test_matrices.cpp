#include <random>

#include "doctest.h"
#include "torus_fixture.hpp"
#include "knotinv/errors.hpp"
#include "knotinv/invariant.hpp"
#include "knotinv/matrices.hpp"
#include "knotinv/moves.hpp"
#include "knotinv/parity.hpp"
#include "oracles.hpp"

using namespace knotinv;

namespace {

const VarSet RR = VarSet::r_ring();

RElement R(std::string_view text) { return RElement(parse_poly(text, RR)); }

std::vector<Diagram> random_diagrams(bool surface, int count, std::uint64_t seed, int max_crossings = 7) {
  std::mt19937_64 rng(seed);
  std::vector<Diagram> out;
  for (int k = 0; k < count; ++k) {
    RandomDiagramOptions options;
    options.surface = surface;
    options.genus = surface ? k % 3 : 0;
    options.max_crossings = max_crossings;
    out.push_back(random_diagram(options, rng));
  }
  return out;
}

}  // namespace

TEST_CASE("M reproduces the reference torus matrices") {
  for (const auto& [name, rows] : {std::pair{"1.12", &torus::kM12}, std::pair{"1.13bar", &torus::kM13}}) {
    CAPTURE(name);
    const Diagram d = torus::load(name);
    const auto m = build_M(d, gaussian_parity(d));
    CHECK(m == torus::reference_for(d, *rows));
  }
}

TEST_CASE("M matches the strand-walk oracle") {
  for (const Diagram& d : random_diagrams(true, 150, 31)) {
    CAPTURE(serialize(d));
    CHECK(build_M(d, gaussian_parity(d)) == oracle::walk_M(d));
  }
}

TEST_CASE("M rows of genus-0 all-even diagrams sum to zero") {
  int tested = 0;
  for (const Diagram& d : random_diagrams(false, 300, 37)) {
    const auto parity = gaussian_parity(d);
    if (std::count(parity.begin(), parity.end(), Parity::odd) != 0 || d.empty()) continue;
    ++tested;
    const auto m = build_M(d, parity);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      QuotientElement sum = m.zero();
      for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j);
      CHECK(sum.is_zero());
    }
  }
  CHECK(tested > 10);
}

TEST_CASE("M rejects a parity map of the wrong size") {
  const Diagram d = parse_gauss("O1+ U1+");
  try {
    (void)build_M(d, {});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parity_incomplete);
  }
}

TEST_CASE("renumbering crossings changes det M by at most a sign") {
  for (const Diagram& d : random_diagrams(true, 60, 41, 6)) {
    std::vector<Token> tokens = d.tokens;
    for (Token& tok : tokens) {
      if (tok.is_passage()) tok.index = 50 - tok.index;
    }
    const Diagram r = make_diagram("r", d.kind, d.genus, tokens);
    const QuotientElement a = det_sparse(build_M(d, gaussian_parity(d)));
    const QuotientElement b = det_sparse(build_M(r, gaussian_parity(r)));
    CHECK((a == b || a == -b));
  }
}

TEST_CASE("N'' examples") {
  const Diagram v = parse_gauss("O1+ O2+ U1+ U2+");
  const NppMatrix nv = build_Npp(v, hierarchy_types(v));
  CHECK(nv.matrix.rows() == 0);

  const Diagram t = parse_gauss("O1- U2- O3- U1- O2- U3-");
  const NppMatrix nt = build_Npp(t, hierarchy_types(t));
  REQUIRE(nt.matrix.rows() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    QuotientElement sum = nt.matrix.zero();
    for (std::size_t j = 0; j < 3; ++j) sum += nt.matrix(i, j);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("N'' matches the strand-walk oracle") {
  std::vector<Diagram> samples{parse_gauss("O1+ O2+ O3+ U1+ U2+ O4+ U3+ U4+"), parse_gauss("O1+ U2- O3+ U4- U1+ O4- O2- U3+")};
  for (const Diagram& d : random_diagrams(false, 150, 43, 8)) samples.push_back(d);
  for (const Diagram& d : samples) {
    CAPTURE(serialize(d));
    const auto types = hierarchy_types(d);
    CHECK(build_Npp(d, types).matrix == oracle::walk_Npp(d, types));
  }
}

TEST_CASE("N presentation") {
  SUBCASE("empty diagram") {
    const Presentation p = n_presentation(parse_gauss("u:"));
    CHECK(p.matrix.rows() == 0);
    CHECK(p.matrix.cols() == 0);
  }
  SUBCASE("classical trefoil: 3 relations, 3 generators") {
    const Presentation p = n_presentation(parse_gauss("O1- U2- O3- U1- O2- U3-"));
    CHECK(p.matrix.rows() == 3);
    CHECK(p.matrix.cols() == 3);
  }
  SUBCASE("virtual trefoil: two relations per type-0 crossing") {
    const Presentation p = n_presentation(parse_gauss("O1+ O2+ U1+ U2+"));
    REQUIRE(p.matrix.rows() == 4);
    REQUIRE(p.matrix.cols() == 4);
    const char* expected[4][4] = {{"-1", "0", "0", "s"}, {"0", "r", "-1", "w"}, {"s", "-1", "0", "0"}, {"w", "0", "r", "-1"}};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) CHECK(p.matrix(i, j) == R(expected[i][j]));
    }
  }
  SUBCASE("type-0 coefficients come from the transfer matrices") {
    for (const int sign : {1, -1}) {
      const std::string s = sign > 0 ? "+" : "-";
      const Presentation p = n_presentation(parse_gauss("O1" + s + " O2" + s + " U1" + s + " U2" + s));
      std::vector<RElement> allowed;
      for (const char* text : sign > 0 ? std::vector<const char*>{"-1", "s", "r", "w"}
                                       : std::vector<const char*>{"-1", "s^-1", "r^-1", "-w*t^-1"}) {
        allowed.push_back(r_reduce(R(text)));
      }
      int nonzero = 0;
      for (std::size_t i = 0; i < p.matrix.rows(); ++i) {
        for (std::size_t j = 0; j < p.matrix.cols(); ++j) {
          if (p.matrix(i, j).is_zero()) continue;
          ++nonzero;
          CHECK(std::find(allowed.begin(), allowed.end(), p.matrix(i, j)) != allowed.end());
        }
      }
      CHECK(nonzero == 10);
    }
  }
  SUBCASE("without type-0 crossings the rows are those of N''") {
    for (const Diagram& d : random_diagrams(false, 200, 47, 7)) {
      const auto types = hierarchy_types(d);
      if (std::count(types.begin(), types.end(), 0) != 0) continue;
      const NppMatrix npp = build_Npp(d, types);
      const Presentation p = build_N_presentation(d, types);
      REQUIRE(p.matrix.rows() == npp.matrix.rows());
      REQUIRE(p.matrix.cols() == npp.matrix.cols());
      for (std::size_t i = 0; i < p.matrix.rows(); ++i) {
        for (std::size_t j = 0; j < p.matrix.cols(); ++j) {
          CHECK(p.matrix(i, j) == r_reduce(RElement(npp.matrix(i, j).expanded().with_vars(RR))));
        }
      }
    }
  }
}
