#include "knotinv/matrices.hpp"

#include <algorithm>

#include "knotinv/errors.hpp"

namespace knotinv {

namespace {

// Label of one incidence, before the arc monomial.
LaurentPoly role_label(VarSet vars, Role role, int sign, bool odd) {
  const LaurentPoly one = LaurentPoly::constant(vars, 1);
  const LaurentPoly a = LaurentPoly::variable(vars, odd ? Var::p : Var::t);
  const LaurentPoly b = odd ? LaurentPoly::variable(vars, Var::q) : one - LaurentPoly::variable(vars, Var::t);
  switch (role) {
    case Role::over:
      return b;
    case Role::incoming_under:
      return sign > 0 ? a : -one;
    case Role::outgoing_under:
      return sign > 0 ? -one : a;
    case Role::vertex_in:
      return -one;
    case Role::vertex_out:
      return one;
  }
  return LaurentPoly(vars);
}

template <class T, class Normalize>
Matrix<T> finish(const std::vector<std::vector<LaurentPoly>>& raw, const T& zero, Normalize normalize) {
  const std::size_t n = raw.size();
  Matrix<T> m(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!raw[i][j].is_zero()) m(i, j) = normalize(raw[i][j]);
    }
  }
  return m;
}

}  // namespace

Matrix<GElement> build_M(const Diagram& d, const std::vector<Parity>& parity, const std::vector<int>& gaps) {
  const int n = d.crossing_count();
  if (static_cast<int>(parity.size()) != n) {
    throw Error(ErrorCode::parity_incomplete,
                std::to_string(parity.size()) + " parities for " + std::to_string(n) + " crossings");
  }
  const VarSet vars = VarSet::g_ring(d.genus);
  const ArcTable table = arcs(d, gaps);
  const auto size = table.arcs.size();
  std::vector<std::vector<LaurentPoly>> raw(size, std::vector<LaurentPoly>(size, LaurentPoly(vars)));
  for (std::size_t j = 0; j < size; ++j) {
    for (const Incidence& inc : table.arcs[j].incidences) {
      Exponents e{};
      for (std::size_t m = 0; m < inc.label.size(); ++m) {
        e[static_cast<std::size_t>(var_index(side_var(static_cast<int>(m) + 1)))] =
            static_cast<std::int16_t>(inc.label[m]);
      }
      const bool is_crossing = inc.node < n;
      const int sign = is_crossing ? d.sign(inc.node + 1) : 1;
      const bool odd = is_crossing && parity[static_cast<std::size_t>(inc.node)] == Parity::odd;
      raw[static_cast<std::size_t>(inc.node)][j] += role_label(vars, inc.role, sign, odd).shifted(e);
    }
  }
  return finish(raw, GElement::zero(vars), [](const LaurentPoly& p) { return GElement::normalize(p); });
}

NppMatrix build_Npp(const Diagram& d, const std::vector<int>& types) {
  const int n = d.crossing_count();
  if (static_cast<int>(types.size()) != n) {
    throw Error(ErrorCode::parity_incomplete,
                std::to_string(types.size()) + " types for " + std::to_string(n) + " crossings");
  }
  const VarSet vars = VarSet::rprime_ring();
  const ShortArcTable table = short_arcs(d, types);
  NppMatrix out;
  std::vector<int> row_of(static_cast<std::size_t>(n), -1);
  for (const ShortArc& arc : table.arcs) {
    row_of[static_cast<std::size_t>(arc.origin)] = static_cast<int>(out.crossings.size());
    out.crossings.push_back(arc.origin);
  }
  const auto size = table.arcs.size();
  std::vector<std::vector<LaurentPoly>> raw(size, std::vector<LaurentPoly>(size, LaurentPoly(vars)));
  for (std::size_t j = 0; j < size; ++j) {
    for (const ShortIncidence& inc : table.arcs[j].incidences) {
      const bool odd = types[static_cast<std::size_t>(inc.crossing)] == 1;
      const Exponents e = exponents_of({{Var::s, inc.s_exponent}});
      raw[static_cast<std::size_t>(row_of[static_cast<std::size_t>(inc.crossing)])][j] +=
          role_label(vars, inc.role, d.sign(inc.crossing + 1), odd).shifted(e);
    }
  }
  out.matrix = finish(raw, RPrimeElement::zero(vars), [](const LaurentPoly& p) { return RPrimeElement::normalize(p); });
  return out;
}

Presentation build_N_presentation(const Diagram& d, const std::vector<int>& types) {
  const int n = d.crossing_count();
  if (static_cast<int>(types.size()) != n) {
    throw Error(ErrorCode::parity_incomplete,
                std::to_string(types.size()) + " types for " + std::to_string(n) + " crossings");
  }
  const VarSet vars = VarSet::r_ring();
  const auto un = static_cast<std::size_t>(n);
  auto label = [&d](int c) { return std::to_string(d.labels[static_cast<std::size_t>(c)]); };

  // Generator numbering: the arc after U_c is c; the arc after the over
  // passage of the k-th type-0 crossing is n + k.
  std::vector<int> over_gen(un, -1);
  Presentation out;
  for (int c = 0; c < n; ++c) out.col_names.push_back("U" + label(c));
  for (int c = 0; c < n; ++c) {
    if (types[static_cast<std::size_t>(c)] == 0) {
      over_gen[static_cast<std::size_t>(c)] = static_cast<int>(out.col_names.size());
      out.col_names.push_back("O" + label(c));
    }
  }
  const std::size_t gens = out.col_names.size();

  std::vector<int> under_in(un, -1);
  std::vector<int> over_in(un, -1);
  std::vector<std::vector<int>> over_through(un);  // type-1/2 over passages
  auto breaks = [&](const Token& tok) {
    return tok.is_under() || (tok.is_over() && types[static_cast<std::size_t>(tok.index - 1)] == 0);
  };
  auto started = [&](const Token& tok) {
    const auto c = static_cast<std::size_t>(tok.index - 1);
    return tok.is_under() ? static_cast<int>(c) : over_gen[c];
  };
  const auto first = std::find_if(d.tokens.begin(), d.tokens.end(), breaks);
  if (first != d.tokens.end()) {
    const std::size_t size = d.tokens.size();
    const auto b = static_cast<std::size_t>(first - d.tokens.begin());
    int current = started(*first);
    for (std::size_t k = 1; k <= size; ++k) {
      const Token& tok = d.tokens[(b + k) % size];
      if (!tok.is_passage()) continue;
      const auto c = static_cast<std::size_t>(tok.index - 1);
      if (!breaks(tok)) {
        over_through[c].push_back(current);
        continue;
      }
      (tok.is_under() ? under_in[c] : over_in[c]) = current;
      current = started(tok);
    }
  }

  std::vector<std::vector<LaurentPoly>> rows;
  auto new_row = [&](std::string name) -> std::vector<LaurentPoly>& {
    out.row_names.push_back(std::move(name));
    rows.emplace_back(gens, LaurentPoly(vars));
    return rows.back();
  };
  const LaurentPoly one = LaurentPoly::constant(vars, 1);
  const LaurentPoly w = LaurentPoly::variable(vars, Var::w);
  for (int c = 0; c < n; ++c) {
    const auto uc = static_cast<std::size_t>(c);
    const int sign = d.sign(c + 1);
    const auto u_out = uc;
    const auto u_in = static_cast<std::size_t>(under_in[uc]);
    if (types[uc] != 0) {
      auto& row = new_row(label(c));
      const bool odd = types[uc] == 1;
      row[u_in] += role_label(vars, Role::incoming_under, sign, odd);
      row[u_out] += role_label(vars, Role::outgoing_under, sign, odd);
      for (int g : over_through[uc]) row[static_cast<std::size_t>(g)] += role_label(vars, Role::over, sign, odd);
      continue;
    }
    const auto o_out = static_cast<std::size_t>(over_gen[uc]);
    const auto o_in = static_cast<std::size_t>(over_in[uc]);
    auto& under_row = new_row(label(c) + "u");
    under_row[u_out] -= one;
    under_row[u_in] += LaurentPoly::variable(vars, Var::s, sign);
    auto& over_row = new_row(label(c) + "o");
    over_row[o_out] -= one;
    over_row[o_in] += LaurentPoly::variable(vars, Var::r, sign);
    over_row[u_in] += sign > 0 ? w : -(w * LaurentPoly::variable(vars, Var::t, -1));
  }

  out.matrix = Matrix<RElement>(rows.size(), gens, RElement());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < gens; ++j) {
      if (!rows[i][j].is_zero()) out.matrix(i, j) = r_reduce(RElement(rows[i][j]));
    }
  }
  return out;
}

}  // namespace knotinv
