#include "knotinv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "knotinv/errors.hpp"
#include "knotinv/invariant.hpp"
#include "knotinv/moves.hpp"
#include "knotinv/parity.hpp"

namespace knotinv {

namespace {

using nlohmann::ordered_json;

constexpr int kUsage = 1;
constexpr int kCounterexample = 2;

constexpr const char* kFormats =
    "input formats:\n"
    "  .gauss  one diagram per line: 'name: TOK TOK ...', TOK = O<id><+|-> or U<id><+|->\n"
    "  .surf   first line 'genus <g>;', then the same lines; TOK may also be x<m><+|-> (1 <= m <= 2g)\n"
    "  '#' starts a comment";

struct Common {
  bool json = false;
  bool lenient = false;
};

ParsedFile load(const std::string& path, const Common& common, std::ostream& err) {
  ParsedFile file = read_file(path, common.lenient);
  for (const std::string& skipped : file.skipped) err << "skipped " << skipped << "\n";
  return file;
}

const Diagram& find_diagram(const ParsedFile& file, const std::string& name) {
  for (const Diagram& d : file.diagrams) {
    if (d.name == name) return d;
  }
  throw std::invalid_argument("no diagram named '" + name + "'");
}

std::string default_type(const ParsedFile& file) { return file.kind == DiagramKind::surface ? "s" : "nprime"; }

InvariantValue invariant_of(const Diagram& d, const std::string& type) {
  return type == "s" ? s_invariant(d) : nprime_invariant(d);
}

ordered_json unit_json(const UnitRecord& u) {
  return {{"sign", u.sign}, {"alpha", u.alpha}, {"beta", u.beta}, {"gamma", u.gamma}};
}

ordered_json parity_json(const Diagram& d) {
  const auto parity = gaussian_parity(d);
  const auto types = hierarchy_types(d);
  ordered_json p = ordered_json::object();
  ordered_json t = ordered_json::object();
  for (int c = 0; c < d.crossing_count(); ++c) {
    const std::string id = std::to_string(d.labels[static_cast<std::size_t>(c)]);
    p[id] = parity[static_cast<std::size_t>(c)] == Parity::even ? "even" : "odd";
    t[id] = types[static_cast<std::size_t>(c)];
  }
  return {{"parity", p}, {"types", t}};
}

template <class T>
void print_matrix(std::ostream& out, const Matrix<T>& m, bool triples) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (triples) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m(i, j).is_zero()) out << i + 1 << "\t" << j + 1 << "\t" << m(i, j).to_string() << "\n";
      }
      continue;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "\t" : "") << m(i, j).to_string();
    out << "\n";
  }
}

void dump_matrix(std::ostream& out, const Diagram& d, const std::string& type, bool triples) {
  auto ids = [&d](const std::vector<int>& crossings) {
    std::string s;
    for (int c : crossings) s += (s.empty() ? "" : " ") + std::to_string(d.labels[static_cast<std::size_t>(c)]);
    return s;
  };
  if (type == "s") {
    const auto m = build_M(d, gaussian_parity(d));
    std::vector<int> all(static_cast<std::size_t>(d.crossing_count()));
    for (int c = 0; c < d.crossing_count(); ++c) all[static_cast<std::size_t>(c)] = c;
    out << "# " << d.name << " M " << ring_name(VarSet::g_ring(d.genus)) << " " << m.rows() << "x" << m.cols()
        << " crossings: " << ids(all) << "\n";
    print_matrix(out, m, triples);
  } else if (type == "nprime") {
    const auto npp = build_Npp(d, hierarchy_types(d));
    out << "# " << d.name << " N'' R' " << npp.matrix.rows() << "x" << npp.matrix.cols()
        << " crossings: " << ids(npp.crossings) << "\n";
    print_matrix(out, npp.matrix, triples);
  } else {
    const auto pres = n_presentation(d);
    std::string rows, cols;
    for (const auto& r : pres.row_names) rows += (rows.empty() ? "" : " ") + r;
    for (const auto& c : pres.col_names) cols += (cols.empty() ? "" : " ") + c;
    out << "# " << d.name << " N R " << pres.matrix.rows() << "x" << pres.matrix.cols() << " rows: " << rows
        << " columns: " << cols << "\n";
    print_matrix(out, pres.matrix, triples);
  }
}

int cmd_parity(const std::string& path, const Common& common, std::ostream& out, std::ostream& err) {
  const ParsedFile file = load(path, common, err);
  ordered_json all = ordered_json::array();
  for (const Diagram& d : file.diagrams) {
    const ChordData cd = chord_data(d);
    const auto parity = gaussian_parity(cd);
    const auto types = hierarchy_types(d);
    if (common.json) {
      ordered_json entry{{"name", d.name}};
      ordered_json counts = ordered_json::object();
      for (int c = 0; c < d.crossing_count(); ++c) {
        counts[std::to_string(d.labels[static_cast<std::size_t>(c)])] = cd.interlacement[static_cast<std::size_t>(c)];
      }
      entry["interlacement"] = counts;
      entry.update(parity_json(d));
      all.push_back(entry);
      continue;
    }
    out << d.name << "\n";
    for (int c = 0; c < d.crossing_count(); ++c) {
      const auto uc = static_cast<std::size_t>(c);
      out << "  crossing " << d.labels[uc] << ": interlacement " << cd.interlacement[uc] << ", "
          << (parity[uc] == Parity::even ? "even" : "odd") << ", type " << types[uc] << "\n";
    }
  }
  if (common.json) out << all.dump(2) << "\n";
  return 0;
}

int cmd_invariant(const std::string& path, std::string type, bool dump, const Common& common, std::ostream& out,
                  std::ostream& err) {
  const ParsedFile file = load(path, common, err);
  if (type.empty()) type = default_type(file);
  ordered_json all = ordered_json::array();
  for (const Diagram& d : file.diagrams) {
    const InvariantValue v = invariant_of(d, type);
    if (dump && !common.json) dump_matrix(out, d, type, false);
    if (common.json) {
      ordered_json entry{{"name", d.name},
                         {"ring", ring_name(v.ring())},
                         {"invariant", type},
                         {"canonical", v.canonical.to_string()},
                         {"unit_record", unit_json(v.normalization)},
                         {"resolved", v.resolved}};
      entry.update(parity_json(d));
      all.push_back(entry);
    } else {
      out << d.name << ": " << v.canonical.to_string() << "\n";
    }
  }
  if (common.json) out << all.dump(2) << "\n";
  return 0;
}

int cmd_compare(const std::string& path, const std::string& first, const std::string& second, std::string type,
                bool expect_equivalent, const Common& common, std::ostream& out, std::ostream& err) {
  const ParsedFile file = load(path, common, err);
  if (type.empty()) type = default_type(file);
  const InvariantValue a = invariant_of(find_diagram(file, first), type);
  const InvariantValue b = invariant_of(find_diagram(file, second), type);
  const ComparisonResult r = compare(a, b);
  const std::string& lhs = r.swapped ? first : second;
  const std::string& rhs = r.swapped ? second : first;
  if (common.json) {
    ordered_json j{{"verdict", verdict_name(r.verdict)},
                   {"invariant", type},
                   {"ring", ring_name(a.ring())},
                   {"values",
                    {{{"name", first}, {"canonical", a.canonical.to_string()}},
                     {{"name", second}, {"canonical", b.canonical.to_string()}}}}};
    if (r.verdict == Verdict::equivalent) {
      j["unit_record"] = unit_json(r.unit);
      j["relation"] = lhs + " = unit * " + rhs;
    }
    out << j.dump(2) << "\n";
  } else {
    out << verdict_name(r.verdict);
    if (r.verdict == Verdict::equivalent) out << " " << lhs << " = " << r.unit.to_string() << " * " << rhs;
    out << "\n";
  }
  return expect_equivalent && r.verdict == Verdict::distinct ? kCounterexample : 0;
}

int cmd_verify(const VerifyOptions& options, const std::string& report_path, const Common& common,
               std::ostream& out) {
  const VerifyReport report = verify_invariance(options);
  ordered_json j{{"seed", options.seed},
                 {"trials", options.trials},
                 {"diagrams", report.diagrams},
                 {"moves", report.moves},
                 {"s_comparisons", report.s_comparisons},
                 {"nprime_comparisons", report.nprime_comparisons},
                 {"degenerate", report.degenerate},
                 {"axiom_checks", report.axiom_checks}};
  ordered_json by_kind = ordered_json::object();
  for (int k = 0; k < kMoveKinds; ++k) {
    by_kind[std::string(move_kind_name(static_cast<MoveKind>(k)))] = report.moves_by_kind[static_cast<std::size_t>(k)];
  }
  j["moves_by_kind"] = by_kind;
  ordered_json failures = ordered_json::array();
  for (const Counterexample& c : report.failures) {
    failures.push_back({{"code", c.code}, {"move", c.move}, {"category", c.category}, {"reason", c.reason}});
  }
  j["counterexamples"] = failures;
  if (!report_path.empty()) {
    std::ofstream file(report_path);
    if (!file) throw std::runtime_error("cannot write " + report_path);
    file << j.dump(2) << "\n";
  }
  if (common.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "diagrams " << report.diagrams << ", moves " << report.moves << "\n";
    for (int k = 0; k < kMoveKinds; ++k) {
      out << "  " << move_kind_name(static_cast<MoveKind>(k)) << " " << report.moves_by_kind[static_cast<std::size_t>(k)]
          << "\n";
    }
    out << "s comparisons " << report.s_comparisons << ", n' comparisons " << report.nprime_comparisons
        << ", skipped (empty matrix) " << report.degenerate << "\n";
    out << "counterexamples " << report.failures.size() << "\n";
    for (const Counterexample& c : report.failures) out << "  " << c.code << " | " << c.move << " | " << c.category << ": " << c.reason << "\n";
  }
  return report.ok() ? 0 : kCounterexample;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parity-based polynomial invariants of virtual knots and knots in thickened surfaces"};
  app.footer(kFormats);
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Machine-readable output");
  app.add_flag("--lenient", common.lenient, "Skip malformed lines instead of failing");

  std::string path;
  std::string type;

  auto* parity = app.add_subcommand("parity", "Interlacement counts, parity and type of each crossing");
  parity->add_option("file", path, "Diagram file")->required();

  bool dump = false;
  auto* invariant = app.add_subcommand("invariant", "Canonical s or n' of each diagram");
  invariant->add_option("file", path, "Diagram file")->required();
  invariant->add_option("--type", type, "s or nprime (default: s for surface files, nprime for Gauss files)")
      ->check(CLI::IsMember({"s", "nprime"}));
  invariant->add_flag("--dump-matrix", dump, "Print the matrix before each value");

  std::string first, second;
  bool expect_equivalent = false;
  auto* cmp = app.add_subcommand("compare", "Compare two diagrams' invariants up to units");
  cmp->add_option("file", path, "Diagram file")->required();
  cmp->add_option("name1", first, "First diagram")->required();
  cmp->add_option("name2", second, "Second diagram")->required();
  cmp->add_option("--type", type, "s or nprime")->check(CLI::IsMember({"s", "nprime"}));
  cmp->add_flag("--expect-equivalent", expect_equivalent, "Exit with status 2 on a Distinct verdict");

  VerifyOptions vopts;
  std::string which = "both";
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Randomized move-invariance and parity-axiom checks");
  verify->add_option("--trials", vopts.trials, "Random diagrams per invariant")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-crossings", vopts.max_crossings, "Crossings per random diagram")
      ->check(CLI::Range(0, 14));
  verify->add_option("--genus", vopts.max_genus, "Largest genus of random surface diagrams")
      ->check(CLI::Range(0, kMaxGenus));
  verify->add_option("--seed", vopts.seed, "Random seed");
  verify->add_option("--invariant", which, "s, nprime or both")->check(CLI::IsMember({"s", "nprime", "both"}));
  verify->add_option("--insertions", vopts.sampling.insertions_per_kind, "Sampled insertion sites per move kind")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--report", report_path, "Also write the JSON report to this file");

  bool triples = false;
  auto* dumpcmd = app.add_subcommand("dump-matrix", "Print M, N'' or the N presentation");
  dumpcmd->add_option("file", path, "Diagram file")->required();
  dumpcmd->add_option("--type", type, "s (M), nprime (N'') or n (presentation over R)")
      ->check(CLI::IsMember({"s", "nprime", "n"}));
  dumpcmd->add_flag("--triples", triples, "One 'row col entry' line per nonzero entry");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*parity) return cmd_parity(path, common, out, err);
    if (*invariant) return cmd_invariant(path, type, dump, common, out, err);
    if (*cmp) return cmd_compare(path, first, second, type, expect_equivalent, common, out, err);
    if (*verify) {
      vopts.check_s = which != "nprime";
      vopts.check_nprime = which != "s";
      return cmd_verify(vopts, report_path, common, out);
    }
    if (*dumpcmd) {
      const ParsedFile file = load(path, common, err);
      for (const Diagram& d : file.diagrams) dump_matrix(out, d, type.empty() ? default_type(file) : type, triples);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n" << kFormats << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace knotinv
