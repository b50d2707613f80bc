#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "connwidth/budget.hpp"
#include "connwidth/graph.hpp"
#include "connwidth/report.hpp"
#include "connwidth/subset.hpp"

namespace connwidth {

enum class Provenance {
    explicit_table,
    graph_cut,
    graph_boundary,
};

std::string_view to_string(Provenance p);

// A finite ground set {0..n-1} together with a function on all its subsets,
// stored as a dense table indexed by mask. Construction is the only mutation;
// instances are safe to share across threads.
//
// A table qualifying as symmetric submodular satisfies
//   f(A) = f(X \ A)                            for every A, and
//   f(A) + f(B) >= f(A & B) + f(A | B)         for every A, B;
// validate_symmetric_submodular checks both exhaustively.
class ConnectivitySystem {
public:
    ConnectivitySystem(std::uint32_t n, std::vector<std::uint32_t> values, Provenance provenance,
                       std::string source);

    std::uint32_t ground_size() const { return n_; }
    Mask universe() const { return full_mask(n_); }
    Provenance provenance() const { return provenance_; }
    const std::string& source() const { return source_; }
    const std::vector<std::uint32_t>& values() const { return values_; }

    std::uint32_t eval(Mask a) const { return values_[a]; }

    bool is_k_efficient(Mask a, std::uint32_t k) const { return values_[a] <= k; }

    std::uint32_t max_singleton_value() const;

private:
    std::uint32_t n_;
    std::vector<std::uint32_t> values_;
    Provenance provenance_;
    std::string source_;
};

// Wraps an explicit table. `values` must have exactly 2^n entries, n >= 1.
// With `validate` set, both defining conditions are checked up front and a
// violation throws InputError naming the witness masks.
ConnectivitySystem make_explicit(std::uint32_t n, std::vector<std::uint32_t> values, bool validate = false,
                                 const Budget& budget = {}, std::string source = {});

// Ground set = vertices; f(A) = number of edges with exactly one endpoint
// in A, multiplicity counted. Throws InputError on self-loops.
ConnectivitySystem make_graph_cut(const Graph& g, std::string source = {}, const Budget& budget = {});

// Ground set = edges; f(A) = number of vertices incident both to an edge in
// A and to an edge outside A. Requires at least one edge; throws InputError
// on self-loops.
ConnectivitySystem make_graph_boundary(const Graph& g, std::string source = {}, const Budget& budget = {});

// Exhaustive check of the two defining conditions: symmetry over all 2^n
// masks first, then submodularity over all ordered pairs in lexicographic
// order. Returns the first violation (SYM with witnesses {A, X\A}, or
// SUBMOD with witnesses {A, B}), or a passing SUBMOD report. Refuses with
// GuardError when n exceeds budget.validate_max_n.
AxiomReport validate_symmetric_submodular(const ConnectivitySystem& sys, const Budget& budget = {});

}  // namespace connwidth
