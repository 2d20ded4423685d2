#include <random>
#include <set>

#include "doctest.h"
#include "knotinv/errors.hpp"
#include "knotinv/invariant.hpp"
#include "knotinv/moves.hpp"
#include "knotinv/parity.hpp"
#include "oracles.hpp"

using namespace knotinv;

namespace {

bool has_kind(const std::vector<MoveInstance>& moves, MoveKind kind) {
  return std::any_of(moves.begin(), moves.end(), [kind](const MoveInstance& m) { return m.kind == kind; });
}

std::vector<Diagram> random_diagrams(bool surface, int count, std::uint64_t seed, int max_crossings = 6) {
  std::mt19937_64 rng(seed);
  std::vector<Diagram> out;
  for (int k = 0; k < count; ++k) {
    RandomDiagramOptions options;
    options.surface = surface;
    options.genus = surface ? 1 + k % 2 : 0;
    options.max_crossings = max_crossings;
    out.push_back(random_diagram(options, rng));
  }
  return out;
}

/// The removal that undoes an insertion, in the numbering of the result.
MoveInstance undo(const MoveInstance& m, const MoveResult& r) {
  MoveInstance inverse;
  inverse.kind = m.kind == MoveKind::r1_plus ? MoveKind::r1_minus : MoveKind::r2_minus;
  for (int c : r.created) inverse.site.push_back(c + 1);
  return inverse;
}

}  // namespace

TEST_CASE("site detection examples") {
  std::mt19937_64 rng(1);
  const MoveSampling sampling;

  const auto kink = applicable(parse_gauss("O1+ U1+"), sampling, rng);
  CHECK(std::find(kink.begin(), kink.end(), MoveInstance{MoveKind::r1_minus, {1}, 0}) != kink.end());

  // A bigon needs opposite signs: equal signs give odd writhe 2, which no
  // sequence of moves can remove.
  CHECK(has_kind(applicable(parse_gauss("O1+ U2- U1+ O2-"), sampling, rng), MoveKind::r2_minus));
  CHECK_FALSE(has_kind(applicable(parse_gauss("O1+ U2+ U1+ O2+"), sampling, rng), MoveKind::r2_minus));

  const auto empty = applicable(parse_gauss("u:"), sampling, rng);
  CHECK_FALSE(empty.empty());
  for (const MoveInstance& m : empty) CHECK((m.kind == MoveKind::r1_plus || m.kind == MoveKind::r2_plus));
  CHECK(has_kind(empty, MoveKind::r1_plus));
  CHECK(has_kind(empty, MoveKind::r2_plus));
}

TEST_CASE("R1- on a single kink gives the empty diagram") {
  const MoveResult r = apply(parse_gauss("k: O1+ U1+"), {MoveKind::r1_minus, {1}, 0});
  CHECK(r.diagram.empty());
  CHECK(r.diagram.tokens.empty());
  CHECK(r.old_to_new == std::vector<int>{-1});
}

TEST_CASE("inapplicable moves are rejected") {
  const Diagram d = parse_gauss("O1- U2- O3- U1- O2- U3-");
  for (const MoveInstance& m : {MoveInstance{MoveKind::r1_minus, {1}, 0}, MoveInstance{MoveKind::r2_minus, {1, 2}, 0},
                                MoveInstance{MoveKind::r3, {1, 2, 3}, 0}, MoveInstance{MoveKind::side_pass, {0}, 0},
                                MoveInstance{MoveKind::r1_minus, {9}, 0}}) {
    CAPTURE(m.to_string());
    CHECK_FALSE(is_applicable(d, m));
    try {
      (void)apply(d, m);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::move_not_applicable);
    }
  }
}

TEST_CASE("insertions followed by their removal restore the code") {
  for (const bool surface : {false, true}) {
    for (const Diagram& d : random_diagrams(surface, 30, surface ? 61 : 62, 4)) {
      for (const MoveKind kind : {MoveKind::r1_plus, MoveKind::r2_plus}) {
        for (const MoveInstance& m : all_sites(d, kind)) {
          CAPTURE(serialize(d));
          CAPTURE(m.to_string());
          const MoveResult r = apply(d, m);
          CHECK(r.diagram.crossing_count() == d.crossing_count() + (kind == MoveKind::r1_plus ? 1 : 2));
          const MoveResult back = apply(r.diagram, undo(m, r));
          CHECK(serialize(back.diagram) == serialize(d));
        }
      }
    }
  }
}

TEST_CASE("R3 applied twice restores the code") {
  int seen = 0;
  for (const Diagram& d : random_diagrams(false, 120, 63, 7)) {
    for (const MoveInstance& m : all_sites(d, MoveKind::r3)) {
      ++seen;
      const MoveResult r = apply(d, m);
      MoveInstance again = m;
      for (int& c : again.site) c = r.old_to_new[static_cast<std::size_t>(c - 1)] + 1;
      REQUIRE(is_applicable(r.diagram, again));
      CHECK(serialize(apply(r.diagram, again).diagram) == serialize(d));
    }
  }
  CHECK(seen > 20);
}

TEST_CASE("every site yields a valid diagram that keeps untouched ids") {
  for (const bool surface : {false, true}) {
    for (const Diagram& d : random_diagrams(surface, 60, surface ? 65 : 66, 6)) {
      for (int k = 0; k < kMoveKinds; ++k) {
        for (const MoveInstance& m : all_sites(d, static_cast<MoveKind>(k))) {
          CAPTURE(serialize(d));
          CAPTURE(m.to_string());
          const MoveResult r = apply(d, m);
          const std::string text = serialize(r.diagram);
          CHECK(serialize(surface ? parse_surface(text) : parse_gauss(text)) == text);
          for (std::size_t c = 0; c < r.old_to_new.size(); ++c) {
            if (r.old_to_new[c] >= 0) CHECK(r.diagram.labels[static_cast<std::size_t>(r.old_to_new[c])] == d.labels[c]);
          }
          std::set<int> ids(r.diagram.labels.begin(), r.diagram.labels.end());
          CHECK(ids.size() == r.diagram.labels.size());
        }
      }
    }
  }
}

TEST_CASE("side pass keeps the homology class and s") {
  const Diagram d = parse_surface("genus 1; k: O1+ x1+ U1+");
  const MoveInstance m{MoveKind::side_pass, {2}, 1};
  REQUIRE(is_applicable(d, m));
  const MoveResult r = apply(d, m);
  CHECK(homology(r.diagram) == homology(d));
  CHECK(compare(s_invariant(d), s_invariant(r.diagram)).verdict == Verdict::equivalent);

  for (const Diagram& e : random_diagrams(true, 60, 67, 5)) {
    for (const MoveInstance& p : all_sites(e, MoveKind::side_pass)) {
      CHECK(homology(apply(e, p).diagram) == homology(e));
    }
  }
}

TEST_CASE("subdivision leaves s unchanged up to units") {
  for (const Diagram& d : random_diagrams(true, 40, 69, 5)) {
    if (d.empty()) continue;
    for (const MoveInstance& m : all_sites(d, MoveKind::subdivide)) {
      const MoveResult r = apply(d, m);
      CHECK(r.gaps.size() == 1);
      CHECK(compare(s_invariant(d), s_invariant_subdivided(r.diagram, r.gaps)).verdict == Verdict::equivalent);
    }
  }
}

TEST_CASE("R2+ creating an odd pair on the virtual trefoil keeps n'") {
  const Diagram d = parse_gauss("vtrefoil: O1+ O2+ U1+ U2+");
  int odd_pairs = 0;
  for (const MoveInstance& m : all_sites(d, MoveKind::r2_plus)) {
    const MoveResult r = apply(d, m);
    const auto parity = gaussian_parity(r.diagram);
    if (parity[static_cast<std::size_t>(r.created[0])] != Parity::odd) continue;
    ++odd_pairs;
    VerifyReport report;
    check_move(d, m, false, true, report);
    CHECK(report.ok());
    CHECK(compare(nprime_invariant(d), nprime_invariant(r.diagram)).verdict == Verdict::equivalent);
  }
  CHECK(odd_pairs > 0);
}

TEST_CASE("moves touching an empty matrix are counted as degenerate") {
  VerifyReport report;
  check_move(parse_gauss("u:"), {MoveKind::r1_plus, {0}, 0}, true, true, report);
  CHECK(report.ok());
  CHECK(report.degenerate == 2);
  CHECK(report.axiom_checks == 1);
}

TEST_CASE("n' separates virtual from classical trefoils") {
  const Diagram c = parse_gauss("O1- U2- O3- U1- O2- U3-");
  for (const char* code : {"O1+ O2+ U1+ U2+", "O1+ O2- U1+ U2-"}) {
    CHECK(compare(nprime_invariant(parse_gauss(code)), nprime_invariant(c)).verdict == Verdict::distinct);
  }
}

TEST_CASE("invariance driver on a small seeded run") {
  VerifyOptions options;
  options.seed = 71;
  options.trials = 40;
  options.max_crossings = 6;
  const VerifyReport a = verify_invariance(options);
  CHECK(a.ok());
  CHECK(a.diagrams == 80);
  CHECK(a.moves > 0);
  CHECK(a.s_comparisons > 0);
  CHECK(a.nprime_comparisons > 0);
  for (int k = 0; k < kMoveKinds; ++k) {
    CAPTURE(move_kind_name(static_cast<MoveKind>(k)));
    CHECK(a.moves_by_kind[static_cast<std::size_t>(k)] > 0);
  }
  const VerifyReport b = verify_invariance(options);
  CHECK(a.moves == b.moves);
  CHECK(a.moves_by_kind == b.moves_by_kind);
}
