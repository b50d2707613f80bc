#include "connwidth/slow_eval.hpp"

#include <algorithm>

namespace connwidth::slowpath {

// Everything below quantifies straight over all masks, re-deriving each
// clause from its definition. Kept deliberately naive and separate from the
// fast checkers.

namespace {

bool in_family(const std::vector<Mask>& members, Mask m) {
    for (Mask x : members) {
        if (x == m) return true;
    }
    return false;
}

}  // namespace

bool is_single_ideal(const ConnectivitySystem& sys, const std::vector<Mask>& members, std::uint32_t k,
                     IhVariant variant, bool require_ie) {
    const std::uint32_t n = sys.ground_size();
    const Mask full = full_mask(n);
    const std::uint64_t table_size = std::uint64_t{1} << n;

    // IB
    for (Mask a : members) {
        if (sys.eval(a) > k) return false;
    }

    // IH
    for (std::uint64_t mb = 0; mb < table_size; ++mb) {
        const Mask b = static_cast<Mask>(mb);
        if (!in_family(members, b)) continue;
        for (std::uint64_t ma = 0; ma < table_size; ++ma) {
            const Mask a = static_cast<Mask>(ma);
            if (a == b) continue;
            if ((a & b) != a) continue;
            if (variant == IhVariant::guarded && sys.eval(a) > k) continue;
            if (!in_family(members, a)) return false;
        }
    }

    // SIS
    for (std::uint64_t ma = 0; ma < table_size; ++ma) {
        const Mask a = static_cast<Mask>(ma);
        if (!in_family(members, a)) continue;
        for (std::uint32_t e = 0; e < n; ++e) {
            const Mask s = Mask{1} << e;
            if (sys.eval(s) > k) continue;
            if (sys.eval(a | s) > k) continue;
            if (!in_family(members, a | s)) return false;
        }
    }

    // IW
    if (in_family(members, full)) return false;

    // IE
    if (require_ie) {
        for (std::uint64_t ma = 0; ma < table_size; ++ma) {
            const Mask a = static_cast<Mask>(ma);
            if (sys.eval(a) > k) continue;
            const bool lhs = in_family(members, a);
            const bool rhs = in_family(members, a ^ full);
            if (lhs == rhs) return false;
        }
    }

    return true;
}

bool is_linear_obstacle(const ConnectivitySystem& sys, const std::vector<Mask>& members, std::uint32_t k) {
    const std::uint32_t n = sys.ground_size();
    const Mask full = full_mask(n);
    const std::uint64_t table_size = std::uint64_t{1} << n;

    // O1
    for (Mask a : members) {
        if (sys.eval(a) > k) return false;
    }

    // O2
    for (std::uint64_t mb = 0; mb < table_size; ++mb) {
        const Mask b = static_cast<Mask>(mb);
        if (!in_family(members, b)) continue;
        for (std::uint64_t ma = 0; ma < table_size; ++ma) {
            const Mask a = static_cast<Mask>(ma);
            if ((a & b) != a) continue;
            if (sys.eval(a) > k) continue;
            if (!in_family(members, a)) return false;
        }
    }

    // O3, quantified over every C of size at most one (not only the minimal
    // remainder): any placement triggering the clause must be satisfied.
    for (std::uint64_t ma = 0; ma < table_size; ++ma) {
        const Mask a = static_cast<Mask>(ma);
        if (sys.eval(a) > k) continue;
        for (std::uint64_t mb = 0; mb < table_size; ++mb) {
            const Mask b = static_cast<Mask>(mb);
            if ((a & b) != 0) continue;
            if (sys.eval(b) > k) continue;
            bool triggered = false;
            if ((a | b) == full) triggered = true;
            for (std::uint32_t e = 0; e < n && !triggered; ++e) {
                if ((a | b | (Mask{1} << e)) == full) triggered = true;
            }
            if (!triggered) continue;
            if (!in_family(members, a) && !in_family(members, b)) return false;
        }
    }

    return true;
}

}  // namespace connwidth::slowpath
