#pragma once

/**
 * @file arf.hpp
 * @brief Second Feng-Rao distances and numbers of Arf semigroups.
 *
 * An Arf semigroup with multiplicity sequence (d_1, ..., d_r) is N translated
 * successively by d_{r-1}, ..., d_1. FengRaoProfile::build walks that chain:
 *
 *   - E_2 of each translate is min(translation, E_2 of the predecessor + 1);
 *   - delta^2 on [c, c + e - 1] follows a case split on e, rho_3, rho_{r-1}
 *     and r (delta2_first_window);
 *   - delta^2 at c + e + k is the predecessor's delta^2(c_prev + k) plus 2 when
 *     the translation equals the predecessor's multiplicity and its
 *     delta^1(c_prev + e_prev + k) equals that delta^2 value, plus 3 otherwise.
 *
 * The table covers [c, 2c - 1]; from 2c - 1 on delta^2(m) = m + 1 - 2g + E_2.
 * delta^1 is the closed form with breakpoints m_k = c + rho_k - 1.
 */

#include <vector>

#include "fengrao/generic.hpp"
#include "fengrao/semigroup.hpp"

namespace fengrao {

FengRaoNumber e2_from_sequence(const MultiplicitySequence& d);
FengRaoNumber e2_translate(FengRaoNumber e2_prev, Int translation);

/// delta^1 of an Arf semigroup at a member (or any m >= c).
Int delta1_arf(const NumericalSemigroup& s, Int m);

/// delta^2 of an Arf semigroup at a member m <= c + e - 1 (m = 0 gives 2).
Int delta2_first_window(const NumericalSemigroup& s, Int m);

class FengRaoProfile {
  public:
    /// Runs the translation recursion over the multiplicity sequence.
    /// Throws NotArf if the sequence does not realize an Arf semigroup.
    static FengRaoProfile build(const MultiplicitySequence& d);

    const NumericalSemigroup& semigroup() const noexcept { return semigroup_; }
    FengRaoNumber e2() const noexcept { return e2_; }
    Int conductor() const noexcept { return semigroup_.conductor(); }
    Int genus() const noexcept { return semigroup_.genus(); }

    /// delta^2(m) for m in [c, 2c - 1], indexed by m - c.
    const std::vector<Int>& delta2_table() const noexcept { return delta2_table_; }

    /// m_k = c + rho_k - 1 for k = 2..r.
    std::vector<Int> delta1_breakpoints() const;

    Int delta1(Int m) const;
    Int delta2(Int m) const;

  private:
    FengRaoProfile(NumericalSemigroup s, FengRaoNumber e2, std::vector<Int> table)
        : semigroup_(std::move(s)), e2_(e2), delta2_table_(std::move(table)) {}

    NumericalSemigroup semigroup_;
    FengRaoNumber e2_;
    std::vector<Int> delta2_table_;
};

inline FengRaoProfile delta2_profile(const MultiplicitySequence& d) { return FengRaoProfile::build(d); }

/// delta^2 at any member m, or any m >= c.
Int delta2_arf(const MultiplicitySequence& d, Int m);

/// Closed form for <2, 2g + 1>, g >= 2, at a member m.
Int delta2_hyperelliptic(Int g, Int m);

}  // namespace fengrao
