#include "knotinv/parity.hpp"

#include <stdexcept>

namespace knotinv {

namespace {

bool strictly_between(int x, std::pair<int, int> chord) { return chord.first < x && x < chord.second; }

}  // namespace

bool ChordData::interleaved(int a, int b) const {
  const auto ca = endpoints[static_cast<std::size_t>(a)];
  const auto cb = endpoints[static_cast<std::size_t>(b)];
  return strictly_between(cb.first, ca) != strictly_between(cb.second, ca);
}

ChordData chord_data(const Diagram& d) {
  return chord_data(d, std::vector<bool>(static_cast<std::size_t>(d.crossing_count()), true));
}

ChordData chord_data(const Diagram& d, const std::vector<bool>& keep) {
  const auto n = static_cast<std::size_t>(d.crossing_count());
  ChordData cd;
  cd.endpoints.assign(n, {-1, -1});
  cd.interlacement.assign(n, 0);
  int pos = 0;
  for (const Token& tok : d.tokens) {
    if (!tok.is_passage() || !keep[static_cast<std::size_t>(tok.index - 1)]) continue;
    auto& ends = cd.endpoints[static_cast<std::size_t>(tok.index - 1)];
    (ends.first < 0 ? ends.first : ends.second) = pos++;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (keep[b] && cd.interleaved(static_cast<int>(a), static_cast<int>(b))) {
        ++cd.interlacement[a];
        ++cd.interlacement[b];
      }
    }
  }
  return cd;
}

std::vector<Parity> gaussian_parity(const ChordData& cd) {
  std::vector<Parity> out;
  out.reserve(cd.interlacement.size());
  for (int count : cd.interlacement) out.push_back(count % 2 == 0 ? Parity::even : Parity::odd);
  return out;
}

std::vector<Parity> gaussian_parity(const Diagram& d) { return gaussian_parity(chord_data(d)); }

std::vector<int> hierarchy_types(const Diagram& d, int depth) {
  if (depth < 1 || depth > 2) throw std::invalid_argument("parity hierarchy depth must be 1 or 2");
  const auto parity = gaussian_parity(d);
  const auto n = parity.size();
  std::vector<int> types(n, 2);
  std::vector<bool> keep(n, true);
  for (std::size_t c = 0; c < n; ++c) {
    if (parity[c] == Parity::odd) {
      types[c] = 0;
      keep[c] = false;
    }
  }
  if (depth == 1) return types;
  const auto projected = gaussian_parity(chord_data(d, keep));
  for (std::size_t c = 0; c < n; ++c) {
    if (keep[c] && projected[c] == Parity::odd) types[c] = 1;
  }
  return types;
}

}  // namespace knotinv
