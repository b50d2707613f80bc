#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "connwidth/subset.hpp"

namespace connwidth {

// Closed list of checkable clauses. IB..IE and O1..O3 are the two axiom
// systems; SYM/SUBMOD are the defining conditions of a symmetric submodular
// function; L1a/L1b the two derived inequalities; PRE the per-element
// singleton precondition of the cross-check harness.
enum class AxiomId {
    IB,
    IH,
    SIS,
    IW,
    IE,
    O1,
    O2,
    O3,
    SYM,
    SUBMOD,
    L1a,
    L1b,
    PRE,
};

std::string_view to_string(AxiomId id);
std::optional<AxiomId> axiom_from_string(std::string_view s);

// Verdict for one clause. When `holds` is false the witnesses instantiate
// the quantified clause so that it evaluates to false; re-checking the
// clause at the witnesses must reproduce the violation.
struct AxiomReport {
    AxiomId axiom = AxiomId::IB;
    bool holds = true;
    std::vector<Mask> witnesses;               // up to three subsets
    std::optional<std::uint32_t> element;      // SIS / PRE witness element
    std::string note;

    friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

inline AxiomReport pass_report(AxiomId id, std::string note = {}) {
    AxiomReport r;
    r.axiom = id;
    r.note = std::move(note);
    return r;
}

}  // namespace connwidth
