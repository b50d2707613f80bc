#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace connwidth {

// Guard and budget knobs shared by the validators, the search routines and
// the harnesses. Defaults keep every sweep at desk scale; the CLI layers
// CONNWIDTH_GUARDS and --budget overrides on top.
struct Budget {
    std::uint32_t table_max_n = 24;       // explicit/materialized table cap (memory)
    std::uint32_t validate_max_n = 13;    // full submodularity sweep cap (4^n pairs)
    std::uint32_t dp_max_n = 24;          // linear-width DP cap
    std::uint32_t bruteforce_max_n = 9;   // factorial width oracle cap
    std::uint32_t max_efficient = 22;     // family enumeration cap (2^count families)
    std::uint32_t max_pairs = 20;         // ideal-search complement-pair cap
    std::uint32_t mismatch_cap = 100;     // mismatches listed per report (total is always counted)

    // Applies one "key=value" override. Throws InputError on unknown key or
    // unparsable value.
    void apply(std::string_view key_eq_val);

    // Applies a comma-separated override list ("dp_max_n=20,max_pairs=12").
    void apply_list(std::string_view list);

    // Defaults plus overrides from the CONNWIDTH_GUARDS environment variable.
    static Budget from_env();
};

}  // namespace connwidth
