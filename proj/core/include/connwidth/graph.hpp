#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace connwidth {

// Undirected multigraph. Multi-edges are kept (cut values count
// multiplicity); self-loops are rejected by the system constructors.
struct Graph {
    std::uint32_t vertex_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    bool has_self_loop() const;
    void require_valid() const;  // endpoints < vertex_count, throws InputError
};

// SplitMix64; the fixed-constant generator behind every seeded artifact so
// identical seeds give identical corpora on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1): top 53 bits scaled by 2^-53.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound) by rejection-free modulo (bias negligible for
    // the tiny bounds used here, but kept exact via rejection anyway).
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Named graph generators; the corpus vocabulary of the CLI.
Graph make_path(std::uint32_t n);                 // vertices 0-1-...-(n-1)
Graph make_cycle(std::uint32_t n);                // n >= 3
Graph make_complete(std::uint32_t n);             // K_n
Graph make_star(std::uint32_t leaves);            // center 0, leaves 1..leaves
Graph make_random(std::uint32_t n, double edge_probability, std::uint64_t seed);

}  // namespace connwidth
