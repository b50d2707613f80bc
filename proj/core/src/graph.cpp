#include "connwidth/graph.hpp"

#include "connwidth/errors.hpp"

namespace connwidth {

bool Graph::has_self_loop() const {
    for (const auto& [u, v] : edges) {
        if (u == v) return true;
    }
    return false;
}

void Graph::require_valid() const {
    for (const auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint >= vertex count " + std::to_string(vertex_count));
        }
    }
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    // Lemire-style rejection to stay exactly uniform.
    if (bound == 0) return 0;
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
        std::uint64_t x = next();
        if (x >= threshold) return x % bound;
    }
}

Graph make_path(std::uint32_t n) {
    if (n < 1) throw InputError("path generator requires n >= 1");
    Graph g;
    g.vertex_count = n;
    for (std::uint32_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

Graph make_cycle(std::uint32_t n) {
    if (n < 3) throw InputError("cycle generator requires n >= 3");
    Graph g;
    g.vertex_count = n;
    for (std::uint32_t i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
    return g;
}

Graph make_complete(std::uint32_t n) {
    if (n < 1) throw InputError("complete generator requires n >= 1");
    Graph g;
    g.vertex_count = n;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    }
    return g;
}

Graph make_star(std::uint32_t leaves) {
    if (leaves < 1) throw InputError("star generator requires at least one leaf");
    Graph g;
    g.vertex_count = leaves + 1;
    for (std::uint32_t i = 1; i <= leaves; ++i) g.edges.emplace_back(0u, i);
    return g;
}

Graph make_random(std::uint32_t n, double edge_probability, std::uint64_t seed) {
    if (n < 1) throw InputError("random generator requires n >= 1");
    if (edge_probability < 0.0 || edge_probability > 1.0) {
        throw InputError("edge probability must lie in [0,1]");
    }
    Graph g;
    g.vertex_count = n;
    SplitMix64 rng(seed);
    // One draw per vertex pair in lexicographic order; the draw count is a
    // function of n alone, so the stream stays aligned across p values.
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (rng.next_unit() < edge_probability) g.edges.emplace_back(u, v);
        }
    }
    return g;
}

}  // namespace connwidth
