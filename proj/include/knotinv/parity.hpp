// Chord interlacement, Gaussian parity and the three-type parity hierarchy.

#ifndef KNOTINV_PARITY_HPP
#define KNOTINV_PARITY_HPP

#include <vector>

#include "knotinv/diagram.hpp"

namespace knotinv {

struct ChordData {
  /// Endpoints of chord c (0-based) as positions in the passage-only sequence, first < second.
  std::vector<std::pair<int, int>> endpoints;
  /// Number of chords interleaving chord c.
  std::vector<int> interlacement;

  bool interleaved(int a, int b) const;
};

enum class Parity : unsigned char { even, odd };

ChordData chord_data(const Diagram& d);
/// Restricted to the crossings with keep[c] set; dropped chords get count 0.
ChordData chord_data(const Diagram& d, const std::vector<bool>& keep);

std::vector<Parity> gaussian_parity(const ChordData& cd);
std::vector<Parity> gaussian_parity(const Diagram& d);

/// Type 0 = odd; of the even crossings, those odd after the odd chords are
/// deleted get type 1, the rest type 2. depth 1 stops after the first split
/// (even crossings get type 2); deeper hierarchies are not implemented.
std::vector<int> hierarchy_types(const Diagram& d, int depth = 2);

}  // namespace knotinv

#endif  // KNOTINV_PARITY_HPP
