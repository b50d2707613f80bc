#pragma once

#include <cstdint>
#include <vector>

#include "connwidth/axioms.hpp"
#include "connwidth/system.hpp"

namespace connwidth::slowpath {

// Reference evaluators: direct quantifier loops over raw mask vectors, no
// pruning, no helpers shared with the fast checkers. Mismatches reported by
// the cross-check harness must reproduce under these before being listed.

bool is_single_ideal(const ConnectivitySystem& sys, const std::vector<Mask>& members, std::uint32_t k,
                     IhVariant variant, bool require_ie);

bool is_linear_obstacle(const ConnectivitySystem& sys, const std::vector<Mask>& members, std::uint32_t k);

}  // namespace connwidth::slowpath
