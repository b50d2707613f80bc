#pragma once

// Shared fixture systems for the tests: the named small graphs plus seeded
// random instances.

#include <optional>
#include <string>
#include <vector>

#include "connwidth/graph.hpp"
#include "connwidth/system.hpp"

namespace corpus {

using namespace connwidth;

inline Graph p3() { return make_path(3); }
inline Graph c4() { return make_cycle(4); }
inline Graph k3() { return make_complete(3); }
inline Graph k4() { return make_complete(4); }
inline Graph s3() { return make_star(3); }

inline ConnectivitySystem p3_cut() { return make_graph_cut(p3(), "p3"); }
inline ConnectivitySystem c4_cut() { return make_graph_cut(c4(), "c4"); }
inline ConnectivitySystem k3_cut() { return make_graph_cut(k3(), "k3"); }
inline ConnectivitySystem k4_cut() { return make_graph_cut(k4(), "k4"); }
inline ConnectivitySystem s3_cut() { return make_graph_cut(s3(), "s3"); }

struct NamedSystem {
    std::string name;
    ConnectivitySystem sys;
};

// The named corpus under both built-in functions (boundary only where the
// graph has edges).
inline std::vector<NamedSystem> named_systems() {
    std::vector<NamedSystem> out;
    const std::vector<std::pair<std::string, Graph>> graphs = {
        {"p3", p3()}, {"c4", c4()}, {"k3", k3()}, {"k4", k4()}, {"s3", s3()},
    };
    for (const auto& [name, g] : graphs) {
        out.push_back({name + "-cut", make_graph_cut(g, name + "-cut")});
        out.push_back({name + "-boundary", make_graph_boundary(g, name + "-boundary")});
    }
    return out;
}

// Seeded random graph with vertex count in [1, max_vertices].
inline Graph random_graph(SplitMix64& rng, std::uint32_t max_vertices) {
    const auto n = static_cast<std::uint32_t>(1 + rng.next_below(max_vertices));
    const double p = 0.2 + 0.6 * rng.next_unit();
    return make_random(n, p, rng.next());
}

}  // namespace corpus
