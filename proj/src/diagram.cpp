#include "knotinv/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "knotinv/errors.hpp"
#include "knotinv/laurent.hpp"

namespace knotinv {

namespace {

constexpr const char* kGrammar =
    "expected 'name: TOK TOK ...' with TOK = O<id><+|->, U<id><+|-> or (surface codes) x<m><+|->";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

Token parse_token(std::string_view text, DiagramKind kind, int genus) {
  auto bad = [&text](const std::string& why) {
    return Error(ErrorCode::malformed_token, "'" + std::string(text) + "': " + why);
  };
  if (text.size() < 3) throw bad("too short");
  const char head = text.front();
  const char tail = text.back();
  if (tail != '+' && tail != '-') throw bad("missing sign");
  const std::string_view digits = text.substr(1, text.size() - 2);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value <= 0) {
    throw bad("index must be a positive integer");
  }
  const int sign = tail == '+' ? 1 : -1;
  switch (head) {
    case 'O':
      return Token::passage(value, Strand::over, sign);
    case 'U':
      return Token::passage(value, Strand::under, sign);
    case 'x':
      if (kind != DiagramKind::surface) throw bad("side tokens only appear in surface codes");
      if (value > 2 * genus) {
        throw Error(ErrorCode::side_index_out_of_range,
                    "'" + std::string(text) + "': side index exceeds 2g = " + std::to_string(2 * genus));
      }
      return Token::side(value, sign);
    default:
      throw bad("unknown token kind");
  }
}

int parse_genus_header(std::string_view header) {
  // "genus <g>"
  const auto words = split_ws(header);
  if (words.size() != 2 || words[0] != "genus") {
    throw Error(ErrorCode::malformed_header, "expected 'genus <g>;'");
  }
  int g = 0;
  const auto [ptr, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), g);
  if (ec != std::errc() || ptr != words[1].data() + words[1].size() || g < 0) {
    throw Error(ErrorCode::malformed_header, "genus must be a non-negative integer");
  }
  if (g > kMaxGenus) {
    throw Error(ErrorCode::genus_too_large,
                "genus " + std::to_string(g) + " exceeds the supported maximum " + std::to_string(kMaxGenus));
  }
  return g;
}

// Splits an optional "genus g;" prefix off a single-line surface code.
std::pair<std::optional<int>, std::string_view> split_header(std::string_view text) {
  text = trim(text);
  if (text.substr(0, 5) != "genus") return {std::nullopt, text};
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw Error(ErrorCode::malformed_header, "missing ';' after genus");
  return {parse_genus_header(text.substr(0, semi)), text.substr(semi + 1)};
}

}  // namespace

int Diagram::position(int crossing, Strand strand) const {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (tok.is_passage() && tok.index == crossing && tok.strand == strand) return static_cast<int>(i);
  }
  throw std::out_of_range("no such crossing passage");
}

int Diagram::sign(int crossing) const {
  for (const Token& tok : tokens) {
    if (tok.is_passage() && tok.index == crossing) return tok.sign;
  }
  throw std::out_of_range("no such crossing");
}

Diagram make_diagram(std::string name, DiagramKind kind, int genus, std::vector<Token> tokens) {
  if (genus < 0) throw Error(ErrorCode::malformed_header, "negative genus");
  if (genus > kMaxGenus) throw Error(ErrorCode::genus_too_large, std::to_string(genus));
  if (kind == DiagramKind::gauss && genus != 0) {
    throw Error(ErrorCode::malformed_header, "Gauss codes have genus 0");
  }

  struct Seen {
    int over = 0;
    int under = 0;
    int sign = 0;
    int new_id = 0;
  };
  std::map<int, Seen> seen;
  std::vector<int> labels;
  for (const Token& tok : tokens) {
    if (tok.is_side()) {
      if (kind != DiagramKind::surface) throw Error(ErrorCode::malformed_token, "side token in a Gauss code");
      if (tok.index < 1 || tok.index > 2 * genus) {
        throw Error(ErrorCode::side_index_out_of_range, "x" + std::to_string(tok.index));
      }
      if (tok.sign != 1 && tok.sign != -1) throw Error(ErrorCode::malformed_token, "side sign");
      continue;
    }
    if (tok.index <= 0) throw Error(ErrorCode::malformed_token, "crossing ids are positive");
    if (tok.sign != 1 && tok.sign != -1) throw Error(ErrorCode::malformed_token, "crossing sign");
    auto [it, fresh] = seen.try_emplace(tok.index);
    Seen& s = it->second;
    const std::string id = std::to_string(tok.index);
    if (fresh) {
      labels.push_back(tok.index);
      s.new_id = static_cast<int>(labels.size());
      s.sign = tok.sign;
    }
    if (s.over + s.under >= 2) throw Error(ErrorCode::crossing_seen_too_often, "crossing " + id);
    int& count = tok.strand == Strand::over ? s.over : s.under;
    if (count > 0) throw Error(ErrorCode::crossing_seen_twice_same_strand, "crossing " + id);
    ++count;
    if (s.sign != tok.sign) throw Error(ErrorCode::sign_mismatch, "crossing " + id);
  }
  for (const auto& [id, s] : seen) {
    if (s.over + s.under != 2) throw Error(ErrorCode::crossing_seen_once, "crossing " + std::to_string(id));
  }
  for (Token& tok : tokens) {
    if (tok.is_passage()) tok.index = seen.at(tok.index).new_id;
  }
  Diagram d;
  d.name = std::move(name);
  d.kind = kind;
  d.genus = genus;
  d.tokens = std::move(tokens);
  d.labels = std::move(labels);
  return d;
}

Diagram parse_line(std::string_view line, DiagramKind kind, int genus) {
  line = trim(line);
  std::string name;
  const auto colon = line.find(':');
  if (colon != std::string_view::npos) {
    name = std::string(trim(line.substr(0, colon)));
    line = line.substr(colon + 1);
    if (name.empty() || split_ws(name).size() != 1) {
      throw Error(ErrorCode::malformed_token, "bad diagram name; " + std::string(kGrammar));
    }
  }
  std::vector<Token> tokens;
  for (std::string_view word : split_ws(line)) tokens.push_back(parse_token(word, kind, genus));
  return make_diagram(std::move(name), kind, genus, std::move(tokens));
}

GaussDiagram parse_gauss(std::string_view text) {
  return parse_line(strip_comment(text), DiagramKind::gauss, 0);
}

SurfaceDiagram parse_surface(std::string_view text) {
  auto [genus, body] = split_header(strip_comment(text));
  if (!genus) throw Error(ErrorCode::malformed_header, "surface code needs a 'genus g;' header");
  return parse_line(body, DiagramKind::surface, *genus);
}

std::string token_string(const Token& tok, const Diagram& d) {
  std::string out;
  if (tok.is_side()) {
    out = "x" + std::to_string(tok.index);
  } else {
    out = tok.strand == Strand::over ? "O" : "U";
    const bool known = tok.index >= 1 && tok.index <= d.crossing_count();
    out += std::to_string(known ? d.labels[static_cast<std::size_t>(tok.index - 1)] : tok.index);
  }
  out += tok.sign > 0 ? '+' : '-';
  return out;
}

std::string body_string(const Diagram& d) {
  std::string out;
  for (const Token& tok : d.tokens) {
    if (!out.empty()) out += ' ';
    out += token_string(tok, d);
  }
  return out;
}

std::string serialize(const Diagram& d) {
  std::string out;
  if (d.kind == DiagramKind::surface) out = "genus " + std::to_string(d.genus) + "; ";
  if (!d.name.empty()) out += d.name + ": ";
  out += body_string(d);
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

ParsedFile parse_file(std::string_view content, bool lenient) {
  ParsedFile file;
  bool header_done = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = trim(strip_comment(content.substr(start, end - start)));
    start = end + 1;
    ++line_no;
    if (line.empty()) {
      if (end == content.size()) break;
      continue;
    }
    if (!header_done) {
      header_done = true;
      if (line.substr(0, 5) == "genus") {
        auto [genus, rest] = split_header(line);
        file.kind = DiagramKind::surface;
        file.genus = *genus;
        line = trim(rest);
        if (line.empty()) continue;
      }
    }
    try {
      file.diagrams.push_back(parse_line(line, file.kind, file.genus));
    } catch (const Error& e) {
      if (!lenient) throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
      file.skipped.push_back("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (end == content.size()) break;
  }
  return file;
}

ParsedFile read_file(const std::string& path, bool lenient) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_file(buf.str(), lenient);
}

ArcTable arcs(const Diagram& d, const std::vector<int>& gaps) {
  ArcTable table;
  const int n = d.crossing_count();
  const int size = static_cast<int>(d.tokens.size());
  table.crossings = n;
  table.vertices = static_cast<int>(gaps.size());
  table.arcs.resize(static_cast<std::size_t>(n + table.vertices));

  // Events: vertex v (encoded -(v + 1)) sits before token p, then token p (encoded p).
  std::vector<int> vertex_at(static_cast<std::size_t>(size), -1);
  for (std::size_t v = 0; v < gaps.size(); ++v) {
    const int p = gaps[v];
    if (p < 0 || p >= size || vertex_at[static_cast<std::size_t>(p)] != -1) {
      throw std::invalid_argument("bad subdivision gap");
    }
    vertex_at[static_cast<std::size_t>(p)] = static_cast<int>(v);
  }
  std::vector<int> events;
  for (int p = 0; p < size; ++p) {
    if (vertex_at[static_cast<std::size_t>(p)] >= 0) events.push_back(-(vertex_at[static_cast<std::size_t>(p)] + 1));
    events.push_back(p);
  }

  // Node reached by a breaking event, or -1.
  auto breaker = [&](int ev) -> int {
    if (ev < 0) return n + (-ev - 1);
    const Token& tok = d.tokens[static_cast<std::size_t>(ev)];
    return tok.is_under() ? tok.index - 1 : -1;
  };
  const auto first = std::find_if(events.begin(), events.end(), [&](int ev) { return breaker(ev) >= 0; });
  if (first == events.end()) return table;

  const std::size_t count = events.size();
  const std::size_t b = static_cast<std::size_t>(first - events.begin());
  const auto sides = static_cast<std::size_t>(d.side_count());
  std::vector<int> label(sides, 0);
  auto in_role = [&](int ev) { return ev < 0 ? Role::vertex_in : Role::incoming_under; };
  auto out_role = [&](int ev) { return ev < 0 ? Role::vertex_out : Role::outgoing_under; };

  int current = breaker(events[b]);
  table.arcs[static_cast<std::size_t>(current)].origin = current;
  table.arcs[static_cast<std::size_t>(current)].incidences.push_back({current, out_role(events[b]), label});
  for (std::size_t k = 1; k <= count; ++k) {
    const int ev = events[(b + k) % count];
    const int node = breaker(ev);
    if (node >= 0) {
      table.arcs[static_cast<std::size_t>(current)].incidences.push_back({node, in_role(ev), label});
      if (k == count) break;
      current = node;
      std::fill(label.begin(), label.end(), 0);
      table.arcs[static_cast<std::size_t>(current)].origin = current;
      table.arcs[static_cast<std::size_t>(current)].incidences.push_back({node, out_role(ev), label});
      continue;
    }
    const Token& tok = d.tokens[static_cast<std::size_t>(ev)];
    if (tok.is_side()) {
      label[static_cast<std::size_t>(tok.index - 1)] += tok.sign;
    } else {
      table.arcs[static_cast<std::size_t>(current)].incidences.push_back({tok.index - 1, Role::over, label});
    }
  }
  return table;
}

ShortArcTable short_arcs(const Diagram& d, const std::vector<int>& types) {
  const int n = d.crossing_count();
  if (static_cast<int>(types.size()) != n) throw std::invalid_argument("type map does not cover the diagram");
  ShortArcTable table;
  std::vector<int> arc_of(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < n; ++c) {
    if (types[static_cast<std::size_t>(c)] != 0) {
      arc_of[static_cast<std::size_t>(c)] = static_cast<int>(table.arcs.size());
      table.arcs.push_back({c, {}});
    }
  }
  const auto is_breaker = [&](const Token& tok) {
    return tok.is_under() && types[static_cast<std::size_t>(tok.index - 1)] != 0;
  };
  const auto first = std::find_if(d.tokens.begin(), d.tokens.end(), is_breaker);
  if (first == d.tokens.end()) {
    table.free_loop = true;
    return table;
  }
  const std::size_t size = d.tokens.size();
  const auto b = static_cast<std::size_t>(first - d.tokens.begin());
  int current = arc_of[static_cast<std::size_t>(first->index - 1)];
  int exponent = 0;
  table.arcs[static_cast<std::size_t>(current)].incidences.push_back({first->index - 1, Role::outgoing_under, 0});
  for (std::size_t k = 1; k <= size; ++k) {
    const Token& tok = d.tokens[(b + k) % size];
    if (!tok.is_passage()) continue;
    const int c = tok.index - 1;
    if (types[static_cast<std::size_t>(c)] == 0) {
      exponent += tok.strand == Strand::under ? tok.sign : -tok.sign;
      continue;
    }
    if (tok.strand == Strand::over) {
      table.arcs[static_cast<std::size_t>(current)].incidences.push_back({c, Role::over, exponent});
      continue;
    }
    table.arcs[static_cast<std::size_t>(current)].incidences.push_back({c, Role::incoming_under, exponent});
    if (k == size) break;
    current = arc_of[static_cast<std::size_t>(c)];
    exponent = 0;
    table.arcs[static_cast<std::size_t>(current)].incidences.push_back({c, Role::outgoing_under, 0});
  }
  return table;
}

std::vector<int> homology(const Diagram& d) {
  std::vector<int> total(static_cast<std::size_t>(d.side_count()), 0);
  for (const Token& tok : d.tokens) {
    if (tok.is_side()) total[static_cast<std::size_t>(tok.index - 1)] += tok.sign;
  }
  return total;
}

}  // namespace knotinv
