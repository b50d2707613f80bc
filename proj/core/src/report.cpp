#include "connwidth/report.hpp"

namespace connwidth {

std::string_view to_string(AxiomId id) {
    switch (id) {
        case AxiomId::IB: return "IB";
        case AxiomId::IH: return "IH";
        case AxiomId::SIS: return "SIS";
        case AxiomId::IW: return "IW";
        case AxiomId::IE: return "IE";
        case AxiomId::O1: return "O1";
        case AxiomId::O2: return "O2";
        case AxiomId::O3: return "O3";
        case AxiomId::SYM: return "SYM";
        case AxiomId::SUBMOD: return "SUBMOD";
        case AxiomId::L1a: return "L1a";
        case AxiomId::L1b: return "L1b";
        case AxiomId::PRE: return "PRE";
    }
    return "?";
}

std::optional<AxiomId> axiom_from_string(std::string_view s) {
    for (AxiomId id : {AxiomId::IB, AxiomId::IH, AxiomId::SIS, AxiomId::IW, AxiomId::IE, AxiomId::O1,
                       AxiomId::O2, AxiomId::O3, AxiomId::SYM, AxiomId::SUBMOD, AxiomId::L1a, AxiomId::L1b,
                       AxiomId::PRE}) {
        if (to_string(id) == s) return id;
    }
    return std::nullopt;
}

}  // namespace connwidth
