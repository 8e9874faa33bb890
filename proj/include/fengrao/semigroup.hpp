#pragma once

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups in canonical small-elements form.
 *
 * A numerical semigroup S is stored as the sorted list of its members up to
 * and including the conductor c. Every integer >= c is a member, so the list
 * is a complete finite description and equality is structural.
 *
 * Derived views (generators, multiplicity sequence, Apery sets, divisor
 * sets) are computed on demand from that list.
 */

#include <span>
#include <vector>

#include "fengrao/checked.hpp"

namespace fengrao {

/// Differences between consecutive small elements, terminated by 1.
/// For an Arf semigroup the sequence is nonincreasing and determines it.
struct MultiplicitySequence {
    std::vector<Int> d;

    std::size_t size() const noexcept { return d.size(); }
    Int operator[](std::size_t i) const { return d[i]; }
    bool operator==(const MultiplicitySequence&) const = default;
};

/// Members m with m - x not a member.
struct AperySet {
    std::vector<Int> elements;
    Int with_respect_to = 0;

    std::size_t size() const noexcept { return elements.size(); }
};

/// Union over targets t of the members m with t - m a member.
struct DivisorSet {
    std::vector<Int> elements;
    std::vector<Int> targets;

    std::size_t size() const noexcept { return elements.size(); }
};

class NumericalSemigroup {
  public:
    /// The semigroup of all nonnegative integers.
    NumericalSemigroup();

    /// Validates and canonicalizes an explicit list of members up to the
    /// conductor (the last listed value). Trailing runs of consecutive members
    /// are folded into the conductor.
    static NumericalSemigroup from_small_elements(std::vector<Int> small);
    static NumericalSemigroup from_generators(std::span<const Int> gens);
    static NumericalSemigroup from_multiplicity_sequence(const MultiplicitySequence& seq);

    const std::vector<Int>& small_elements() const noexcept { return small_; }
    Int conductor() const noexcept { return small_.back(); }
    Int multiplicity() const noexcept { return small_.size() > 1 ? small_[1] : 1; }
    Int genus() const noexcept { return conductor() - static_cast<Int>(small_.size()) + 1; }
    /// Index of the conductor among the small elements, counted from 1.
    std::size_t num_small() const noexcept { return small_.size(); }
    bool is_naturals() const noexcept { return small_.size() == 1; }

    bool contains(Int x) const;

    /// Every member in [lo, hi], ascending.
    std::vector<Int> members_in(Int lo, Int hi) const;

    bool operator==(const NumericalSemigroup&) const = default;
    auto operator<=>(const NumericalSemigroup& other) const {
        if (auto cmp = conductor() <=> other.conductor(); cmp != 0) return cmp;
        return small_ <=> other.small_;
    }

  private:
    explicit NumericalSemigroup(std::vector<Int> small) : small_(std::move(small)) {}

    std::vector<Int> small_;
};

AperySet apery(const NumericalSemigroup& s, Int x);
DivisorSet divisors(const NumericalSemigroup& s, std::span<const Int> targets);
DivisorSet divisors(const NumericalSemigroup& s, Int target);

/// {0} ∪ (m + S) for a nonzero member m.
NumericalSemigroup translate(const NumericalSemigroup& s, Int m);

/// The irreducible elements S* \ (S* + S*), ascending.
std::vector<Int> minimal_generators(const NumericalSemigroup& s);

bool is_arf(const NumericalSemigroup& s);

MultiplicitySequence multiplicity_sequence(const NumericalSemigroup& s);

/// One multiplicity sequence per Arf semigroup with conductor <= max_conductor,
/// ordered by (conductor, small elements).
std::vector<MultiplicitySequence> enumerate_arf(Int max_conductor);

/// Same enumeration, returned as realized semigroups.
std::vector<NumericalSemigroup> enumerate_arf_semigroups(Int max_conductor);

}  // namespace fengrao
