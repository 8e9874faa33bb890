#pragma once

// Inductive semigroups: homothecies a*S ∪ (ab + N) and the Weierstrass
// semigroups of the Garcia-Stichtenoth tower over F_{q^2}, where level n is
// q * Gamma^{n-1} ∪ [c_n, ∞). The defining equation of the tower,
// x_n^q + x_n = x_{n-1}^q / (x_{n-1}^{q-1} + 1), only enters through c_n.

#include <utility>
#include <vector>

#include "fengrao/semigroup.hpp"

namespace fengrao {

struct TowerSpec {
    Int q = 2;  ///< q >= 2; primality is not checked.
    Int n = 1;  ///< level >= 1
};

struct HomothecyStep {
    Int a = 2;  ///< scale, >= 2
    Int b = 0;  ///< >= conductor of the input semigroup
};

/// Multiplicity sequence of a*S ∪ (ab + N) for S given by its sequence d.
MultiplicitySequence homothecy(const MultiplicitySequence& d, HomothecyStep step);

/// Applies the steps left to right starting from N.
MultiplicitySequence homothecy_chain(const std::vector<HomothecyStep>& steps);

Int gs_conductor(TowerSpec spec);

MultiplicitySequence gs_tower(TowerSpec spec);

/// Builds Gamma^n directly from its layer decomposition Lambda^0, ..., Lambda^k.
NumericalSemigroup gs_lambda_elements(TowerSpec spec);

/// The layers Lambda^0..Lambda^{k-1} as explicit element lists plus the
/// offset o of the last layer Lambda^k = o + N*.
std::pair<std::vector<std::vector<Int>>, Int> gs_lambda_layers(TowerSpec spec);

}  // namespace fengrao
