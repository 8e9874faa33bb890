#pragma once

/**
 * @file generic.hpp
 * @brief r-th Feng-Rao distances and numbers for arbitrary numerical semigroups.
 *
 * The r-th Feng-Rao distance at a member m is the least size of a divisor
 * union D(m_1, ..., m_r) over member tuples m <= m_1 < ... < m_r. The
 * candidate set is infinite; feng_rao_distance() minimizes over the finite
 * search set F_r(m) built from u = max(m + e - 1, c + e - 1), which attains
 * the same minimum. feng_rao_distance_oracle() is an independent bounded
 * exhaustive search used to cross-check it.
 */

#include <vector>

#include "fengrao/semigroup.hpp"

namespace fengrao {

/// A strictly increasing tuple of members, each >= floor.
struct Configuration {
    std::vector<Int> elements;
    Int floor = 0;

    std::size_t order() const noexcept { return elements.size(); }
    bool operator==(const Configuration&) const = default;
};

/// The constant E with delta^r(m) = m + 1 - 2g + E for m >= 2c - 1.
struct FengRaoNumber {
    Int value = 0;
    int order = 0;

    bool operator==(const FengRaoNumber&) const = default;
};

/// The search set F_r(m), in lexicographic order.
std::vector<Configuration> search_set(const NumericalSemigroup& s, int r, Int m);

Int feng_rao_distance(const NumericalSemigroup& s, int r, Int m);

/// Largest entry the exhaustive oracle considers: u + (r - 1) e.
Int oracle_horizon(const NumericalSemigroup& s, int r, Int m);

/// Exhaustive minimum over all member tuples in [m, horizon]; with the
/// default horizon this equals feng_rao_distance(). A larger horizon is
/// accepted for stability checks.
Int feng_rao_distance_oracle(const NumericalSemigroup& s, int r, Int m, Int horizon = -1);

FengRaoNumber feng_rao_number(const NumericalSemigroup& s, int r);

enum class AperyScan {
    /// min |Ap(S, x)| over 1 <= x <= e.
    full,
    /// Only x among the multiplicity-sequence distances; valid for Arf inputs.
    sequence_distances,
};

FengRaoNumber feng_rao_number_2_apery(const NumericalSemigroup& s, AperyScan scan = AperyScan::full);

/// Size of D(targets) for ascending member targets.
Int divisor_union_size(const NumericalSemigroup& s, std::span<const Int> targets);

}  // namespace fengrao
