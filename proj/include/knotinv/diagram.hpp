// Knot diagram codes: Gauss codes of virtual knots and surface codes of knots
// drawn in the 4g-gon of a genus-g surface.
//
// A code is a cyclic token sequence. A passage token O<c><sign> / U<c><sign>
// records the over / under pre-image of crossing c; a side token x<m><sign>
// records a crossing of side m of the polygon through the selected (+) or
// non-selected (-) copy. Crossings are renumbered 1..n by first appearance;
// the input ids are kept for printing.

#ifndef KNOTINV_DIAGRAM_HPP
#define KNOTINV_DIAGRAM_HPP

#include <string>
#include <string_view>
#include <vector>

namespace knotinv {

enum class Strand : unsigned char { over, under };
enum class TokenKind : unsigned char { passage, side };
enum class DiagramKind : unsigned char { gauss, surface };

struct Token {
  TokenKind kind = TokenKind::passage;
  int index = 0;  // crossing id (1-based) or side index m
  Strand strand = Strand::over;
  int sign = 1;

  static Token passage(int crossing, Strand strand, int sign) {
    return {TokenKind::passage, crossing, strand, sign};
  }
  static Token side(int m, int sign) { return {TokenKind::side, m, Strand::over, sign}; }

  bool is_passage() const { return kind == TokenKind::passage; }
  bool is_side() const { return kind == TokenKind::side; }
  bool is_under() const { return is_passage() && strand == Strand::under; }
  bool is_over() const { return is_passage() && strand == Strand::over; }

  friend bool operator==(const Token&, const Token&) = default;
};

struct Diagram {
  std::string name;
  DiagramKind kind = DiagramKind::gauss;
  int genus = 0;
  std::vector<Token> tokens;
  /// labels[c - 1] is the id crossing c carried in the input.
  std::vector<int> labels;

  int crossing_count() const { return static_cast<int>(labels.size()); }
  int side_count() const { return 2 * genus; }
  bool empty() const { return labels.empty(); }

  /// Position of the over / under passage of crossing c.
  int position(int crossing, Strand strand) const;
  /// Sign of crossing c.
  int sign(int crossing) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

using GaussDiagram = Diagram;
using SurfaceDiagram = Diagram;

/// Checks the pairing rules and renumbers crossings by first appearance.
/// Input ids are arbitrary positive integers; labels are rebuilt from them.
Diagram make_diagram(std::string name, DiagramKind kind, int genus, std::vector<Token> tokens);

/// "name: O1+ U1+ ..." (the name part is optional).
GaussDiagram parse_gauss(std::string_view text);
/// "genus g; name: O1+ x1+ U1+ ..."
SurfaceDiagram parse_surface(std::string_view text);
/// Body of a single line of the given kind with a known genus.
Diagram parse_line(std::string_view line, DiagramKind kind, int genus);

std::string token_string(const Token& tok, const Diagram& d);
/// Tokens only, with the input ids.
std::string body_string(const Diagram& d);
/// The text accepted by parse_gauss / parse_surface.
std::string serialize(const Diagram& d);

struct ParsedFile {
  DiagramKind kind = DiagramKind::gauss;
  int genus = 0;
  std::vector<Diagram> diagrams;
  /// Errors of skipped lines (lenient mode only): "line N: message".
  std::vector<std::string> skipped;
};

/// Parses a .gauss or .surf file body. A file whose first non-comment line is
/// "genus g;" is a surface file. Lines are "name: tokens"; '#' starts a comment.
ParsedFile parse_file(std::string_view content, bool lenient = false);
ParsedFile read_file(const std::string& path, bool lenient = false);

// ----------------------------------------------------------------------------
// Arc extraction

enum class Role : unsigned char { incoming_under, outgoing_under, over, vertex_in, vertex_out };

struct Incidence {
  int node = 0;  // crossing index 0..n-1, or n + v for subdivision vertex v
  Role role = Role::over;
  std::vector<int> label;  // accumulated side exponents, length 2g
};

struct Arc {
  int origin = 0;  // node the arc starts at
  std::vector<Incidence> incidences;
};

struct ArcTable {
  int crossings = 0;
  int vertices = 0;
  /// Arc k (k < n) starts after the under passage of crossing k + 1;
  /// arc n + v starts at subdivision vertex v.
  std::vector<Arc> arcs;
};

/// Arcs of d. gaps lists token positions p in [0, size]; a degree-2 vertex is
/// placed just before token p (distinct positions, sorted on output order).
ArcTable arcs(const Diagram& d, const std::vector<int>& gaps = {});

struct ShortIncidence {
  int crossing = 0;  // 0-based
  Role role = Role::over;
  int s_exponent = 0;
};

struct ShortArc {
  int origin = 0;  // 0-based crossing whose under passage starts the arc
  std::vector<ShortIncidence> incidences;
};

struct ShortArcTable {
  /// One arc per type-1/2 crossing, in increasing crossing order.
  std::vector<ShortArc> arcs;
  /// True when no crossing delimits the curve.
  bool free_loop = false;
};

/// types[c] in {0, 1, 2} for crossing c (0-based). A strand passing a type-0
/// crossing of sign e picks up s^e as the under strand and s^-e as the over strand.
ShortArcTable short_arcs(const Diagram& d, const std::vector<int>& types);

/// Total signed side count per coordinate over the whole curve.
std::vector<int> homology(const Diagram& d);

}  // namespace knotinv

#endif  // KNOTINV_DIAGRAM_HPP
