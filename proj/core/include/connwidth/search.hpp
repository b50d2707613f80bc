#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "connwidth/axioms.hpp"
#include "connwidth/budget.hpp"
#include "connwidth/family.hpp"
#include "connwidth/system.hpp"

namespace connwidth {

// A linear layout: permutation of the ground set witnessing a width value.
using Ordering = std::vector<std::uint32_t>;

struct WidthResult {
    std::uint32_t width = 0;
    Ordering ordering;

    friend bool operator==(const WidthResult&, const WidthResult&) = default;
};

// All subsets A with f(A) <= k, ascending. Complement-closed by symmetry.
SetFamily efficient_sets(const ConnectivitySystem& sys, std::uint32_t k);

// Exact linear-width: min over permutations (e1..en) of the max f-value over
// prefixes {e1..ei}. Subset DP, dp[S] = max(f(S), min_{e in S} dp[S\{e}]),
// dp[empty] = 0; ordering reconstructed with lowest-element tie-breaking.
// GuardError when n exceeds budget.dp_max_n.
WidthResult linear_width(const ConnectivitySystem& sys, const Budget& budget = {});

// Same contract, by enumerating all n! permutations; the independent oracle.
// GuardError when n exceeds budget.bruteforce_max_n.
WidthResult linear_width_bruteforce(const ConnectivitySystem& sys, const Budget& budget = {});

struct EnumOptions {
    bool require_ib = false;          // no-op filter: members are k-efficient by construction
    bool require_guarded_ih = false;  // yield only families passing guarded IH
};

// Streams every subset of the k-efficient collection exactly once, in
// ascending index order (bit j of the index selects the j-th efficient set).
// Throws GuardError up front when the collection exceeds budget.max_efficient.
class FamilyEnumerator {
public:
    FamilyEnumerator(const ConnectivitySystem& sys, std::uint32_t k, const Budget& budget = {},
                     EnumOptions options = {});

    // Next family, or nullopt when exhausted.
    std::optional<SetFamily> next();

    std::uint64_t total_families() const { return std::uint64_t{1} << efficient_.size(); }
    const SetFamily& efficient() const { return efficient_; }

private:
    const ConnectivitySystem& sys_;
    std::uint32_t k_;
    EnumOptions options_;
    SetFamily efficient_;
    std::uint64_t next_index_ = 0;
};

// Builds the family selected by an enumeration index (shared by the
// enumerator and the partitioned harness sweeps).
SetFamily family_at_index(const SetFamily& efficient, std::uint64_t index);

// Exhaustive backtracking search for a family passing all single-ideal
// axioms plus IE. IE restricts candidates to one choice per complement pair
// of k-efficient sets; IH- and SIS-closure propagate after every choice.
// Returns the first family found in deterministic order, or nullopt as a
// proof of nonexistence within the pair guard (GuardError when the pair
// count exceeds budget.max_pairs). With no k-efficient sets the empty family
// passes every axiom vacuously and is returned.
std::optional<SetFamily> find_single_ideal_with_IE(const ConnectivitySystem& sys, std::uint32_t k,
                                                   IhVariant variant, const Budget& budget = {});

}  // namespace connwidth
