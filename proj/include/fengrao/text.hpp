#pragma once

// Text forms accepted wherever a semigroup is an input:
//
//   gens:5,7,9,11,13          generators
//   small:0,4,8               small elements, last one is the conductor
//   mults:12,12,8,4,4,1       multiplicity sequence
//   tower:q=3,n=5             Garcia-Stichtenoth tower level
//   ind:(2,3)(3,10)           homothecy chain applied to N, left to right

#include <string_view>
#include <vector>

#include "fengrao/semigroup.hpp"

namespace fengrao {

NumericalSemigroup parse_semigroup(std::string_view text);

/// Comma-separated integers; whitespace around entries is ignored.
std::vector<Int> parse_int_list(std::string_view text);

Int parse_int(std::string_view text);

}  // namespace fengrao
