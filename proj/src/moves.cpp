#include "knotinv/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "knotinv/errors.hpp"
#include "knotinv/invariant.hpp"
#include "knotinv/parity.hpp"

namespace knotinv {

namespace {

using Tokens = std::vector<Token>;

int token_count(const Diagram& d) { return static_cast<int>(d.tokens.size()); }
int gap_count(const Diagram& d) { return std::max(token_count(d), 1); }

bool adjacent(int i, int j, int size) { return (i + 1) % size == j || (j + 1) % size == i; }
bool comes_first(int i, int j, int size) { return (i + 1) % size == j; }

int next_id(const Diagram& d) { return d.crossing_count() + 1; }

// tokens with the given runs inserted before the given gaps (stable for equal gaps).
Tokens insert_at(const Tokens& tokens, std::vector<std::pair<int, Tokens>> inserts) {
  std::stable_sort(inserts.begin(), inserts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Tokens out;
  std::size_t next = 0;
  for (int pos = 0; pos <= static_cast<int>(tokens.size()); ++pos) {
    while (next < inserts.size() && inserts[next].first == pos) {
      out.insert(out.end(), inserts[next].second.begin(), inserts[next].second.end());
      ++next;
    }
    if (pos < static_cast<int>(tokens.size())) out.push_back(tokens[static_cast<std::size_t>(pos)]);
  }
  return out;
}

bool inverse_sides(const Token& a, const Token& b) {
  return a.is_side() && b.is_side() && a.index == b.index && a.sign == -b.sign;
}

// Cancels side tokens that cross a side and immediately cross back.
Tokens cancel_sides(const Tokens& tokens) {
  Tokens stack;
  for (const Token& tok : tokens) {
    if (!stack.empty() && inverse_sides(stack.back(), tok)) {
      stack.pop_back();
    } else {
      stack.push_back(tok);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = stack.size();
  while (hi - lo >= 2 && inverse_sides(stack[lo], stack[hi - 1])) {
    ++lo;
    --hi;
  }
  return Tokens(stack.begin() + static_cast<std::ptrdiff_t>(lo), stack.begin() + static_cast<std::ptrdiff_t>(hi));
}

MoveResult finish(const Diagram& d, Tokens tokens) {
  MoveResult result;
  result.diagram = make_diagram(d.name, d.kind, d.genus, std::move(tokens));
  const int old_n = d.crossing_count();
  result.old_to_new.assign(static_cast<std::size_t>(old_n), -1);
  for (int c = 0; c < result.diagram.crossing_count(); ++c) {
    const int old = result.diagram.labels[static_cast<std::size_t>(c)];
    if (old <= old_n) {
      result.old_to_new[static_cast<std::size_t>(old - 1)] = c;
    } else {
      result.created.push_back(c);
    }
  }
  // Keep the input ids of surviving crossings for printing; new ones get fresh ids.
  int fresh = 0;
  for (int label : d.labels) fresh = std::max(fresh, label);
  for (int c = 0; c < result.diagram.crossing_count(); ++c) {
    int& label = result.diagram.labels[static_cast<std::size_t>(c)];
    label = label <= old_n ? d.labels[static_cast<std::size_t>(label - 1)] : ++fresh;
  }
  return result;
}

[[noreturn]] void not_applicable(const MoveInstance& m) {
  throw Error(ErrorCode::move_not_applicable, m.to_string());
}

struct R3Roles {
  int o_a, o_b, u_a, o_c, u_b, u_c;  // positions
};

std::optional<R3Roles> r3_roles(const Diagram& d, int a, int b, int c) {
  const int size = token_count(d);
  if (a == b || b == c || a == c) return std::nullopt;
  const R3Roles r{d.position(a, Strand::over),  d.position(b, Strand::over),  d.position(a, Strand::under),
                  d.position(c, Strand::over),  d.position(b, Strand::under), d.position(c, Strand::under)};
  if (!adjacent(r.o_a, r.o_b, size) || !adjacent(r.u_a, r.o_c, size) || !adjacent(r.u_b, r.u_c, size)) {
    return std::nullopt;
  }
  // Orientation consistency of the triangle.
  const int top = comes_first(r.o_a, r.o_b, size) ? 1 : -1;
  const int middle = comes_first(r.u_a, r.o_c, size) ? 1 : -1;
  const int bottom = comes_first(r.u_b, r.u_c, size) ? 1 : -1;
  const int ka = d.sign(a) * top * middle;
  const int kb = d.sign(b) * top * bottom;
  const int kc = d.sign(c) * middle * bottom;
  if (ka != kb || kb != kc) return std::nullopt;
  return r;
}

// Direction of a side pass: the side token next to passage position i.
std::optional<int> side_neighbor(const Diagram& d, int i, int variant) {
  const int size = token_count(d);
  if (i < 0 || i >= size || !d.tokens[static_cast<std::size_t>(i)].is_passage()) return std::nullopt;
  const int j = variant == 0 ? (i + 1) % size : (i + size - 1) % size;
  if (j == i || !d.tokens[static_cast<std::size_t>(j)].is_side()) return std::nullopt;
  return j;
}

}  // namespace

std::string_view move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::r1_plus:
      return "R1+";
    case MoveKind::r1_minus:
      return "R1-";
    case MoveKind::r2_plus:
      return "R2+";
    case MoveKind::r2_minus:
      return "R2-";
    case MoveKind::r3:
      return "R3";
    case MoveKind::side_pass:
      return "SidePass";
    case MoveKind::subdivide:
      return "Subdivide";
  }
  return "?";
}

std::string MoveInstance::to_string() const {
  std::string out(move_kind_name(kind));
  out += " site=";
  for (std::size_t i = 0; i < site.size(); ++i) out += (i ? "," : "") + std::to_string(site[i]);
  out += " variant=" + std::to_string(variant);
  return out;
}

bool is_applicable(const Diagram& d, const MoveInstance& m) {
  const int n = d.crossing_count();
  const int size = token_count(d);
  auto crossing_ok = [n](int c) { return c >= 1 && c <= n; };
  auto gap_ok = [&d](int g) { return g >= 0 && g < gap_count(d); };
  switch (m.kind) {
    case MoveKind::r1_plus:
      return m.site.size() == 1 && gap_ok(m.site[0]) && m.variant >= 0 && m.variant < 4;
    case MoveKind::r1_minus:
      return m.site.size() == 1 && crossing_ok(m.site[0]) &&
             adjacent(d.position(m.site[0], Strand::over), d.position(m.site[0], Strand::under), size);
    case MoveKind::r2_plus:
      return m.site.size() == 2 && gap_ok(m.site[0]) && gap_ok(m.site[1]) && m.variant >= 0 && m.variant < 4;
    case MoveKind::r2_minus: {
      if (m.site.size() != 2 || !crossing_ok(m.site[0]) || !crossing_ok(m.site[1]) || m.site[0] == m.site[1]) {
        return false;
      }
      const int a = m.site[0];
      const int b = m.site[1];
      return d.sign(a) == -d.sign(b) && adjacent(d.position(a, Strand::over), d.position(b, Strand::over), size) &&
             adjacent(d.position(a, Strand::under), d.position(b, Strand::under), size);
    }
    case MoveKind::r3:
      return m.site.size() == 3 && std::all_of(m.site.begin(), m.site.end(), crossing_ok) &&
             r3_roles(d, m.site[0], m.site[1], m.site[2]).has_value();
    case MoveKind::side_pass:
      return m.site.size() == 1 && (m.variant == 0 || m.variant == 1) &&
             side_neighbor(d, m.site[0], m.variant).has_value();
    case MoveKind::subdivide:
      return m.site.size() == 1 && n >= 1 && m.site[0] >= 0 && m.site[0] < size;
  }
  return false;
}

std::vector<MoveInstance> all_sites(const Diagram& d, MoveKind kind) {
  std::vector<MoveInstance> out;
  const int n = d.crossing_count();
  const int size = token_count(d);
  switch (kind) {
    case MoveKind::r1_plus:
      for (int g = 0; g < gap_count(d); ++g) {
        for (int v = 0; v < 4; ++v) out.push_back({kind, {g}, v});
      }
      break;
    case MoveKind::r2_plus:
      for (int g1 = 0; g1 < gap_count(d); ++g1) {
        for (int g2 = 0; g2 < gap_count(d); ++g2) {
          for (int v = 0; v < 4; ++v) out.push_back({kind, {g1, g2}, v});
        }
      }
      break;
    case MoveKind::subdivide:
      if (n >= 1) {
        for (int g = 0; g < size; ++g) out.push_back({kind, {g}, 0});
      }
      break;
    case MoveKind::r1_minus:
      for (int c = 1; c <= n; ++c) {
        MoveInstance m{kind, {c}, 0};
        if (is_applicable(d, m)) out.push_back(m);
      }
      break;
    case MoveKind::r2_minus:
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          MoveInstance m{kind, {a, b}, 0};
          if (is_applicable(d, m)) out.push_back(m);
        }
      }
      break;
    case MoveKind::r3:
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
          for (int c = 1; c <= n; ++c) {
            if (r3_roles(d, a, b, c)) out.push_back({kind, {a, b, c}, 0});
          }
        }
      }
      break;
    case MoveKind::side_pass:
      for (int i = 0; i < size; ++i) {
        for (int v = 0; v < 2; ++v) {
          if (side_neighbor(d, i, v)) out.push_back({kind, {i}, v});
        }
      }
      break;
  }
  return out;
}

std::vector<MoveInstance> applicable(const Diagram& d, const MoveSampling& sampling, std::mt19937_64& rng) {
  std::vector<MoveInstance> out;
  for (MoveKind kind : {MoveKind::r1_minus, MoveKind::r2_minus, MoveKind::r3, MoveKind::side_pass}) {
    auto sites = all_sites(d, kind);
    out.insert(out.end(), sites.begin(), sites.end());
  }
  std::uniform_int_distribution<int> gap(0, gap_count(d) - 1);
  std::uniform_int_distribution<int> variant(0, 3);
  for (int i = 0; i < sampling.insertions_per_kind; ++i) {
    const int g = gap(rng);
    out.push_back({MoveKind::r1_plus, {g}, variant(rng)});
  }
  for (int i = 0; i < sampling.insertions_per_kind; ++i) {
    const int g1 = gap(rng);
    const int g2 = gap(rng);
    out.push_back({MoveKind::r2_plus, {g1, g2}, variant(rng)});
  }
  if (d.crossing_count() >= 1) {
    std::uniform_int_distribution<int> pos(0, token_count(d) - 1);
    for (int i = 0; i < sampling.insertions_per_kind; ++i) out.push_back({MoveKind::subdivide, {pos(rng)}, 0});
  }
  return out;
}

MoveResult apply(const Diagram& d, const MoveInstance& m) {
  if (!is_applicable(d, m)) not_applicable(m);
  const int size = token_count(d);
  switch (m.kind) {
    case MoveKind::r1_plus: {
      const int id = next_id(d);
      const int sign = (m.variant & 2) != 0 ? -1 : 1;
      Token over = Token::passage(id, Strand::over, sign);
      Token under = Token::passage(id, Strand::under, sign);
      Tokens loop = (m.variant & 1) != 0 ? Tokens{under, over} : Tokens{over, under};
      return finish(d, insert_at(d.tokens, {{m.site[0], loop}}));
    }
    case MoveKind::r1_minus: {
      Tokens tokens;
      for (const Token& tok : d.tokens) {
        if (!(tok.is_passage() && tok.index == m.site[0])) tokens.push_back(tok);
      }
      return finish(d, std::move(tokens));
    }
    case MoveKind::r2_plus: {
      const int a = next_id(d);
      const int b = a + 1;
      const int sa = (m.variant & 2) != 0 ? -1 : 1;
      const Tokens overs{Token::passage(a, Strand::over, sa), Token::passage(b, Strand::over, -sa)};
      Tokens unders{Token::passage(a, Strand::under, sa), Token::passage(b, Strand::under, -sa)};
      if ((m.variant & 1) != 0) std::swap(unders[0], unders[1]);
      return finish(d, insert_at(d.tokens, {{m.site[0], overs}, {m.site[1], unders}}));
    }
    case MoveKind::r2_minus: {
      Tokens tokens;
      for (const Token& tok : d.tokens) {
        if (!(tok.is_passage() && (tok.index == m.site[0] || tok.index == m.site[1]))) tokens.push_back(tok);
      }
      return finish(d, std::move(tokens));
    }
    case MoveKind::r3: {
      const R3Roles r = *r3_roles(d, m.site[0], m.site[1], m.site[2]);
      Tokens tokens = d.tokens;
      for (auto [i, j] : {std::pair{r.o_a, r.o_b}, std::pair{r.u_a, r.o_c}, std::pair{r.u_b, r.u_c}}) {
        std::swap(tokens[static_cast<std::size_t>(i)], tokens[static_cast<std::size_t>(j)]);
      }
      return finish(d, std::move(tokens));
    }
    case MoveKind::side_pass: {
      // "P x" -> "x P" with the partner passage P' -> "x P' x^-1";
      // "x P" -> "P x" with P' -> "x^-1 P' x".
      const int i = m.site[0];
      const int j = *side_neighbor(d, i, m.variant);
      const Token passage = d.tokens[static_cast<std::size_t>(i)];
      const Token side = d.tokens[static_cast<std::size_t>(j)];
      const Token inverse = Token::side(side.index, -side.sign);
      const Strand other = passage.strand == Strand::over ? Strand::under : Strand::over;
      const int partner = d.position(passage.index, other);
      const Token partner_tok = d.tokens[static_cast<std::size_t>(partner)];
      Tokens tokens;
      for (int k = 0; k < size; ++k) {
        if (k == partner) {
          if (m.variant == 0) {
            tokens.insert(tokens.end(), {side, partner_tok, inverse});
          } else {
            tokens.insert(tokens.end(), {inverse, partner_tok, side});
          }
        } else if (k == i) {
          tokens.push_back(side);
        } else if (k == j) {
          tokens.push_back(passage);
        } else {
          tokens.push_back(d.tokens[static_cast<std::size_t>(k)]);
        }
      }
      return finish(d, cancel_sides(tokens));
    }
    case MoveKind::subdivide: {
      MoveResult result = finish(d, d.tokens);
      result.gaps = {m.site[0]};
      return result;
    }
  }
  not_applicable(m);
}

Diagram random_diagram(const RandomDiagramOptions& options, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = std::uniform_int_distribution<int>(0, options.max_crossings)(rng);

  Tokens tokens(static_cast<std::size_t>(2 * n));
  std::vector<int> slots(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) slots[static_cast<std::size_t>(i)] = i;
  std::shuffle(slots.begin(), slots.end(), rng);
  for (int c = 1; c <= n; ++c) {
    const int sign = coin(rng) != 0 ? 1 : -1;
    const bool over_first = coin(rng) != 0;
    tokens[static_cast<std::size_t>(slots[static_cast<std::size_t>(2 * c - 2)])] =
        Token::passage(c, over_first ? Strand::over : Strand::under, sign);
    tokens[static_cast<std::size_t>(slots[static_cast<std::size_t>(2 * c - 1)])] =
        Token::passage(c, over_first ? Strand::under : Strand::over, sign);
  }

  auto random_gap = [&rng](const Tokens& t) {
    return std::uniform_int_distribution<int>(0, std::max(static_cast<int>(t.size()), 1) - 1)(rng);
  };
  if (options.surface) {
    for (int m = 1; m <= 2 * options.genus; ++m) {
      const int count = std::uniform_int_distribution<int>(0, options.max_side_tokens)(rng);
      for (int k = 0; k < count; ++k) {
        const int g = random_gap(tokens);
        tokens = insert_at(tokens, {{g, {Token::side(m, coin(rng) != 0 ? 1 : -1)}}});
      }
    }
  }

  if (n + 3 <= options.max_crossings && unit(rng) < options.triangle_chance) {
    // Plant a consistent R3 triangle on three random strands.
    const int a = n + 1, b = n + 2, c = n + 3;
    const int top = coin(rng) != 0 ? 1 : -1;
    const int middle = coin(rng) != 0 ? 1 : -1;
    const int bottom = coin(rng) != 0 ? 1 : -1;
    const int ea = coin(rng) != 0 ? 1 : -1;
    const int k = ea * top * middle;
    const int eb = k * top * bottom;
    const int ec = k * middle * bottom;
    Tokens t{Token::passage(a, Strand::over, ea), Token::passage(b, Strand::over, eb)};
    Tokens mid{Token::passage(a, Strand::under, ea), Token::passage(c, Strand::over, ec)};
    Tokens bot{Token::passage(b, Strand::under, eb), Token::passage(c, Strand::under, ec)};
    if (top < 0) std::swap(t[0], t[1]);
    if (middle < 0) std::swap(mid[0], mid[1]);
    if (bottom < 0) std::swap(bot[0], bot[1]);
    const int g1 = random_gap(tokens), g2 = random_gap(tokens), g3 = random_gap(tokens);
    tokens = insert_at(tokens, {{g1, t}, {g2, mid}, {g3, bot}});
  }

  const DiagramKind kind = options.surface ? DiagramKind::surface : DiagramKind::gauss;
  const int genus = options.surface ? options.genus : 0;
  return make_diagram("random", kind, genus, std::move(tokens));
}

namespace {

struct Baseline {
  std::vector<Parity> parity;
  std::vector<int> types;
  std::optional<InvariantValue> s;
  std::optional<InvariantValue> nprime;
};

Baseline baseline(const Diagram& d, bool check_s, bool check_nprime) {
  Baseline b{gaussian_parity(d), hierarchy_types(d), std::nullopt, std::nullopt};
  if (check_s) b.s = s_invariant(d);
  if (check_nprime) b.nprime = nprime_invariant(d);
  return b;
}

bool allowed_r3_types(std::array<int, 3> t) {
  std::sort(t.begin(), t.end());
  return t == std::array{2, 2, 2} || t == std::array{0, 0, 1} || t == std::array{0, 0, 2} ||
         t == std::array{1, 1, 2};
}

void check_with(const Diagram& d, const Baseline& before, const MoveInstance& m, bool check_s, bool check_nprime,
                VerifyReport& report) {
  std::string category = "apply";
  auto fail = [&](std::string reason) {
    report.failures.push_back({serialize(d), m.to_string(), category, std::move(reason)});
  };
  MoveResult result;
  try {
    result = apply(d, m);
  } catch (const Error& e) {
    fail(std::string("apply failed: ") + e.what());
    return;
  }
  ++report.moves;
  ++report.moves_by_kind[static_cast<std::size_t>(m.kind)];

  const auto parity = gaussian_parity(result.diagram);
  const auto types = hierarchy_types(result.diagram);
  auto label = [&d](int c) { return std::to_string(d.labels[static_cast<std::size_t>(c)]); };

  category = "axiom";
  ++report.axiom_checks;
  for (std::size_t c = 0; c < result.old_to_new.size(); ++c) {
    const int now = result.old_to_new[c];
    if (now < 0) continue;
    if (before.parity[c] != parity[static_cast<std::size_t>(now)]) fail("parity of crossing " + label(static_cast<int>(c)) + " changed");
    if (before.types[c] != types[static_cast<std::size_t>(now)]) fail("type of crossing " + label(static_cast<int>(c)) + " changed");
  }
  switch (m.kind) {
    case MoveKind::r1_plus: {
      const auto c = static_cast<std::size_t>(result.created.at(0));
      if (parity[c] != Parity::even || types[c] != 2) fail("R1 crossing is not even of type 2");
      break;
    }
    case MoveKind::r1_minus: {
      const auto c = static_cast<std::size_t>(m.site[0] - 1);
      if (before.parity[c] != Parity::even || before.types[c] != 2) fail("R1 crossing is not even of type 2");
      break;
    }
    case MoveKind::r2_plus: {
      const auto a = static_cast<std::size_t>(result.created.at(0));
      const auto b = static_cast<std::size_t>(result.created.at(1));
      if (parity[a] != parity[b] || types[a] != types[b]) fail("R2 crossings differ in parity or type");
      break;
    }
    case MoveKind::r2_minus: {
      const auto a = static_cast<std::size_t>(m.site[0] - 1);
      const auto b = static_cast<std::size_t>(m.site[1] - 1);
      if (before.parity[a] != before.parity[b] || before.types[a] != before.types[b]) {
        fail("R2 crossings differ in parity or type");
      }
      break;
    }
    case MoveKind::r3: {
      int odd = 0;
      std::array<int, 3> t{};
      for (std::size_t k = 0; k < 3; ++k) {
        const auto c = static_cast<std::size_t>(m.site[k] - 1);
        odd += before.parity[c] == Parity::odd ? 1 : 0;
        t[k] = before.types[c];
      }
      if (odd % 2 != 0) fail("R3 triple has an odd number of odd crossings");
      if (!allowed_r3_types(t)) fail("R3 triple types outside the four allowed cases");
      break;
    }
    case MoveKind::side_pass:
      if (homology(d) != homology(result.diagram)) fail("side pass changed the homology class");
      break;
    case MoveKind::subdivide:
      break;
  }

  category = "invariant";
  auto compare_values = [&](const InvariantValue& x, const InvariantValue& y, const char* what) {
    const ComparisonResult r = compare(x, y);
    if (r.verdict != Verdict::equivalent) {
      fail(std::string(what) + " " + std::string(verdict_name(r.verdict)) + ": " + x.canonical.to_string() +
           " vs " + y.canonical.to_string());
    }
  };
  // An empty matrix has determinant 1 while a single kink gives 0, so moves
  // into or out of a 0x0 matrix are not comparable.
  if (check_s) {
    if (d.empty() || result.diagram.empty()) {
      ++report.degenerate;
    } else {
      ++report.s_comparisons;
      compare_values(*before.s, s_invariant_subdivided(result.diagram, result.gaps), "s");
    }
  }
  if (check_nprime) {
    auto classical = [](const std::vector<int>& t) { return std::count_if(t.begin(), t.end(), [](int x) { return x != 0; }); };
    if (classical(before.types) == 0 || classical(types) == 0) {
      ++report.degenerate;
    } else {
      ++report.nprime_comparisons;
      compare_values(*before.nprime, nprime_invariant(result.diagram), "n'");
    }
  }
}

}  // namespace

void check_move(const Diagram& d, const MoveInstance& m, bool check_s, bool check_nprime, VerifyReport& report) {
  check_with(d, baseline(d, check_s, check_nprime), m, check_s, check_nprime, report);
}

VerifyReport verify_invariance(const VerifyOptions& options) {
  VerifyReport report;
  std::mt19937_64 rng(options.seed);
  auto run = [&](const Diagram& d, bool s, bool nprime) {
    ++report.diagrams;
    const Baseline before = baseline(d, s, nprime);
    for (const MoveInstance& m : applicable(d, options.sampling, rng)) check_with(d, before, m, s, nprime, report);
  };
  for (int trial = 0; trial < options.trials; ++trial) {
    if (options.check_s) {
      RandomDiagramOptions ro;
      ro.max_crossings = options.max_crossings;
      ro.surface = true;
      ro.genus = std::uniform_int_distribution<int>(0, options.max_genus)(rng);
      run(random_diagram(ro, rng), true, false);
    }
    if (options.check_nprime) {
      RandomDiagramOptions ro;
      ro.max_crossings = options.max_crossings;
      run(random_diagram(ro, rng), false, true);
    }
  }
  return report;
}

}  // namespace knotinv
