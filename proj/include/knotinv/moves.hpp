// Reidemeister moves, side passes and arc subdivision as rewrites of diagram
// codes, plus a seeded driver that checks the invariants and the parity
// axioms across random moves.

#ifndef KNOTINV_MOVES_HPP
#define KNOTINV_MOVES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "knotinv/diagram.hpp"

namespace knotinv {

enum class MoveKind : unsigned char { r1_plus, r1_minus, r2_plus, r2_minus, r3, side_pass, subdivide };
inline constexpr int kMoveKinds = 7;
std::string_view move_kind_name(MoveKind kind);

// Sites and variants (positions index d.tokens, crossings are 1-based):
//   r1_plus    site {gap}                 variant bit0: U first, bit1: sign -
//   r1_minus   site {crossing}
//   r2_plus    site {gap_over, gap_under} variant bit0: under order b a, bit1: crossing a negative
//   r2_minus   site {crossing a, crossing b}
//   r3         site {a, b, c}             a = top/middle, b = top/bottom, c = middle/bottom
//   side_pass  site {passage position}    variant 0: "P x" -> "x P", 1: "x P" -> "P x"
//   subdivide  site {gap}
// A gap g is the slot just before token g (g = 0 for an empty code).
struct MoveInstance {
  MoveKind kind = MoveKind::r1_plus;
  std::vector<int> site;
  int variant = 0;

  std::string to_string() const;
  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

struct MoveResult {
  Diagram diagram;
  /// old_to_new[c] is the 0-based index of old crossing c afterwards, or -1 if removed.
  std::vector<int> old_to_new;
  /// 0-based indices of crossings created by the move.
  std::vector<int> created;
  /// Subdivision gaps to use when building M for the result.
  std::vector<int> gaps;
};

struct MoveSampling {
  /// Insertion sites (r1_plus, r2_plus, subdivide) drawn per kind; every
  /// removal, r3 and side_pass site is always listed.
  int insertions_per_kind = 3;
};

/// All removal/R3/side-pass sites of d, plus sampled insertion sites.
std::vector<MoveInstance> applicable(const Diagram& d, const MoveSampling& sampling, std::mt19937_64& rng);

/// Every site of the given kind, insertions included (all gaps and variants).
std::vector<MoveInstance> all_sites(const Diagram& d, MoveKind kind);

bool is_applicable(const Diagram& d, const MoveInstance& m);

/// Throws MoveNotApplicable if m does not fit d.
MoveResult apply(const Diagram& d, const MoveInstance& m);

// ----------------------------------------------------------------------------
// Random diagrams

struct RandomDiagramOptions {
  int max_crossings = 8;
  int genus = 0;
  bool surface = false;
  /// Side tokens per side are drawn from 0..max_side_tokens.
  int max_side_tokens = 2;
  /// Chance of planting an R3 triangle (counts toward max_crossings).
  double triangle_chance = 0.5;
};

/// Uniform pairing of 2n positions, random over/under and signs, random side tokens.
Diagram random_diagram(const RandomDiagramOptions& options, std::mt19937_64& rng);

// ----------------------------------------------------------------------------
// Invariance driver

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 100;
  int max_crossings = 8;
  int max_genus = 2;
  bool check_s = true;
  bool check_nprime = true;
  MoveSampling sampling;
};

struct Counterexample {
  std::string code;
  std::string move;
  /// "apply", "axiom" or "invariant".
  std::string category;
  std::string reason;
};

struct VerifyReport {
  int diagrams = 0;
  int moves = 0;
  std::vector<int> moves_by_kind = std::vector<int>(kMoveKinds, 0);
  int s_comparisons = 0;
  int nprime_comparisons = 0;
  /// Comparisons skipped because one side has an empty matrix.
  int degenerate = 0;
  int axiom_checks = 0;
  std::vector<Counterexample> failures;

  bool ok() const { return failures.empty(); }
};

VerifyReport verify_invariance(const VerifyOptions& options);

/// Checks one move: parity/type axioms and, when requested, unit-equivalence
/// of s and n'. Failures are appended to the report.
void check_move(const Diagram& d, const MoveInstance& m, bool check_s, bool check_nprime, VerifyReport& report);

}  // namespace knotinv

#endif  // KNOTINV_MOVES_HPP
