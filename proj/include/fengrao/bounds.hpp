#pragma once

// Lower bounds for the second generalized Hamming weight d_2(C_m) of the dual
// one-point code C_m with divisor m*Q:
//
//   delta^2(m+1)                  second Feng-Rao distance
//   delta^1(m+2)                  Pellikaan bound
//   GOB(m+1) = d + ceil(d / F)    Griesmer order bound, d = delta^1(m+1),
//                                 F the size of the code's field
//   GLB(m)   = m + 2 - 2g + E_2   Goppa-like bound
//
// All distance columns are evaluated at m+1 or m+2; GLB is indexed by m.

#include <vector>

#include "fengrao/arf.hpp"

namespace fengrao {

enum class BoundLevel {
    semigroup,  ///< m + 1 - 2g + E_2
    code,       ///< m + 2 - 2g + E_2
};

struct BoundsRow {
    Int m = 0;
    Int delta2_m1 = 0;
    Int delta1_m1 = 0;
    Int gob_m1 = 0;
    Int delta1_m2 = 0;
    Int glb_m = 0;

    bool operator==(const BoundsRow&) const = default;
};

Int goppa_like(const FengRaoProfile& profile, Int m, BoundLevel level);

Int griesmer_order_bound(Int delta1_value, Int field_size);

/// delta^1(m + 2).
Int pellikaan_bound(const FengRaoProfile& profile, Int m);

/// One row per m in [m_lo, m_hi]; the range must lie in [c - 1, 4c].
std::vector<BoundsRow> bounds_table(const FengRaoProfile& profile, Int field_size, Int m_lo, Int m_hi);

std::vector<BoundsRow> bounds_table(const MultiplicitySequence& d, Int field_size, Int m_lo, Int m_hi);

}  // namespace fengrao
