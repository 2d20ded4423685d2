// Crossing/arc matrices of a diagram.
//
// Local labels at a crossing of sign e, with (a, b) = (t, 1 - t) for an even
// crossing and (p, q) for an odd one:
//
//              incoming under   outgoing under   over
//   e = +1          a                -1            b
//   e = -1         -1                 a            b
//
// Each contribution is multiplied by the monomial of the arc's accumulated
// label at that incidence (x-variables for M, a power of s for N'').

#ifndef KNOTINV_MATRICES_HPP
#define KNOTINV_MATRICES_HPP

#include <string>
#include <vector>

#include "knotinv/determinant.hpp"
#include "knotinv/diagram.hpp"
#include "knotinv/parity.hpp"
#include "knotinv/quotient.hpp"
#include "knotinv/rring.hpp"

namespace knotinv {

/// Row i is crossing i + 1 and column j is the arc starting after its under
/// passage; subdivision vertices follow the crossings in the order of gaps.
/// A vertex row reads -x^L on the arc entering it and 1 on the arc leaving it.
Matrix<GElement> build_M(const Diagram& d, const std::vector<Parity>& parity, const std::vector<int>& gaps = {});

struct NppMatrix {
  Matrix<RPrimeElement> matrix;
  /// crossings[i] (0-based) owns row i and starts the short arc of column i.
  std::vector<int> crossings;
};

/// Type-2 crossings take the even labels and type-1 crossings the odd ones;
/// type-0 crossings give no rows.
NppMatrix build_Npp(const Diagram& d, const std::vector<int>& types);

/// Presentation of the module over R. Generators are the short arcs cut at
/// every under passage and at the over passages of type-0 crossings. A type-0
/// crossing of sign +1 gives the two relations
///   u_out = s u_in,    o_out = w u_in + r o_in
/// and one of sign -1 the inverse transfer
///   u_out = s^-1 u_in, o_out = -w t^-1 u_in + r^-1 o_in,
/// written as rows (-1 on the outgoing arc). Entries are r_reduce-d.
struct Presentation {
  Matrix<RElement> matrix;
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
};

Presentation build_N_presentation(const Diagram& d, const std::vector<int>& types);

}  // namespace knotinv

#endif  // KNOTINV_MATRICES_HPP
