#pragma once

// Cross-checks the three ways of computing delta^r over the enumerated Arf
// corpus: the Arf recursion (r <= 2), the F_r(m) search, and the bounded
// exhaustive oracle.

#include <optional>
#include <string>
#include <vector>

#include "fengrao/semigroup.hpp"

namespace fengrao {

struct VerifyOptions {
    Int max_conductor = 24;
    int r_max = 2;
    Int margin = 5;
    unsigned threads = 1;
};

struct Mismatch {
    std::vector<Int> small_elements;
    int r = 0;
    Int m = 0;
    Int fast = -1;  ///< -1 when the Arf recursion does not apply (r > 2)
    Int generic = 0;
    Int oracle = 0;
};

struct VerifyReport {
    std::size_t semigroups = 0;
    std::size_t checks = 0;
    /// Smallest failing case in (enumeration order, r, m).
    std::optional<Mismatch> first_mismatch;
    std::size_t mismatches = 0;

    bool passed() const noexcept { return mismatches == 0; }
};

/// Every Arf semigroup with c <= max_conductor, every m in [c, 2c + margin],
/// every r in 1..r_max. Work is split across threads per semigroup.
VerifyReport verify_corpus(const VerifyOptions& options);

}  // namespace fengrao
