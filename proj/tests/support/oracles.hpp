#pragma once

// Test-only reference oracles. These derive expected values straight from
// the definitions (per-edge / per-vertex counting, no incremental tricks)
// and must stay independent of the code paths they are used to check.

#include <cstdint>
#include <vector>

#include "connwidth/graph.hpp"
#include "connwidth/subset.hpp"
#include "connwidth/system.hpp"

namespace oracles {

using connwidth::Graph;
using connwidth::Mask;

// f(A) for the vertex-cut function: edges with exactly one endpoint in A.
inline std::uint32_t cut_value(const Graph& g, Mask a) {
    std::uint32_t crossing = 0;
    for (const auto& [u, v] : g.edges) {
        const bool u_in = (a >> u) & 1u;
        const bool v_in = (a >> v) & 1u;
        if (u_in != v_in) ++crossing;
    }
    return crossing;
}

// f(A) for the edge-boundary function: vertices incident to an edge of A
// and to an edge outside A.
inline std::uint32_t boundary_value(const Graph& g, Mask a) {
    std::uint32_t shared = 0;
    for (std::uint32_t vertex = 0; vertex < g.vertex_count; ++vertex) {
        bool touches_in = false, touches_out = false;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (g.edges[i].first != vertex && g.edges[i].second != vertex) continue;
            if ((a >> i) & 1u) {
                touches_in = true;
            } else {
                touches_out = true;
            }
        }
        if (touches_in && touches_out) ++shared;
    }
    return shared;
}

inline std::vector<std::uint32_t> cut_table(const Graph& g) {
    std::vector<std::uint32_t> table(std::size_t{1} << g.vertex_count);
    for (std::size_t m = 0; m < table.size(); ++m) table[m] = cut_value(g, static_cast<Mask>(m));
    return table;
}

inline std::vector<std::uint32_t> boundary_table(const Graph& g) {
    std::vector<std::uint32_t> table(std::size_t{1} << g.edges.size());
    for (std::size_t m = 0; m < table.size(); ++m) table[m] = boundary_value(g, static_cast<Mask>(m));
    return table;
}

}  // namespace oracles
