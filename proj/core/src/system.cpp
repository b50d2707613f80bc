#include "connwidth/system.hpp"

#include <bit>

#include "connwidth/errors.hpp"

namespace connwidth {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::explicit_table: return "explicit";
        case Provenance::graph_cut: return "graph_cut";
        case Provenance::graph_boundary: return "graph_boundary";
    }
    return "?";
}

ConnectivitySystem::ConnectivitySystem(std::uint32_t n, std::vector<std::uint32_t> values,
                                       Provenance provenance, std::string source)
    : n_(n), values_(std::move(values)), provenance_(provenance), source_(std::move(source)) {
    if (n_ < 1) throw InputError("ground-set size must be >= 1");
    if (values_.size() != (std::size_t{1} << n_)) {
        throw InputError("value table has " + std::to_string(values_.size()) + " entries, expected 2^" +
                         std::to_string(n_) + " = " + std::to_string(std::size_t{1} << n_));
    }
}

std::uint32_t ConnectivitySystem::max_singleton_value() const {
    std::uint32_t best = 0;
    for (std::uint32_t e = 0; e < n_; ++e) best = std::max(best, values_[Mask{1} << e]);
    return best;
}

namespace {

void require_table_size(std::uint32_t n, const Budget& budget, const char* what) {
    if (n > budget.table_max_n) {
        throw GuardError(std::string(what) + ": ground-set size " + std::to_string(n) +
                             " exceeds table guard " + std::to_string(budget.table_max_n),
                         "table_max_n", n, budget.table_max_n);
    }
    if (n >= 31) throw InputError(std::string(what) + ": ground-set size too large for mask encoding");
}

}  // namespace

ConnectivitySystem make_explicit(std::uint32_t n, std::vector<std::uint32_t> values, bool validate,
                                 const Budget& budget, std::string source) {
    if (n < 1) throw InputError("explicit system: n must be >= 1");
    require_table_size(n, budget, "explicit system");
    ConnectivitySystem sys(n, std::move(values), Provenance::explicit_table,
                           source.empty() ? "explicit" : std::move(source));
    if (validate) {
        AxiomReport r = validate_symmetric_submodular(sys, budget);
        if (!r.holds) throw InputError("explicit system rejected: " + r.note);
    }
    return sys;
}

ConnectivitySystem make_graph_cut(const Graph& g, std::string source, const Budget& budget) {
    if (g.vertex_count < 1) throw InputError("cut system requires at least one vertex");
    g.require_valid();
    if (g.has_self_loop()) throw InputError("cut system: self-loops are not allowed");
    const std::uint32_t n = g.vertex_count;
    require_table_size(n, budget, "cut system");

    // Edge multiplicities and weighted degrees; the table is then filled by
    // the one-element recurrence
    //   f(S + v) = f(S) + deg(v) - 2 * (edges between v and S).
    std::vector<std::uint32_t> mult(static_cast<std::size_t>(n) * n, 0);
    std::vector<std::uint32_t> degree(n, 0);
    for (const auto& [u, v] : g.edges) {
        mult[static_cast<std::size_t>(u) * n + v] += 1;
        mult[static_cast<std::size_t>(v) * n + u] += 1;
        degree[u] += 1;
        degree[v] += 1;
    }

    const std::size_t table_size = std::size_t{1} << n;
    std::vector<std::uint32_t> values(table_size, 0);
    for (std::size_t m = 1; m < table_size; ++m) {
        const std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(m));
        const std::size_t rest = m & (m - 1);
        std::uint32_t inside = 0;
        const std::uint32_t* row = mult.data() + static_cast<std::size_t>(v) * n;
        for (std::size_t t = rest; t != 0; t &= t - 1) {
            inside += row[std::countr_zero(t)];
        }
        values[m] = values[rest] + degree[v] - 2 * inside;
    }

    if (source.empty()) source = "graph_cut";
    return ConnectivitySystem(n, std::move(values), Provenance::graph_cut, std::move(source));
}

ConnectivitySystem make_graph_boundary(const Graph& g, std::string source, const Budget& budget) {
    g.require_valid();
    if (g.edges.empty()) throw InputError("boundary system requires at least one edge");
    if (g.has_self_loop()) throw InputError("boundary system: self-loops are not allowed");
    if (g.vertex_count > 64) throw InputError("boundary system: more than 64 vertices unsupported");
    const std::uint32_t n = static_cast<std::uint32_t>(g.edges.size());
    require_table_size(n, budget, "boundary system");

    std::vector<std::uint64_t> endpoint_bits(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        endpoint_bits[i] = (std::uint64_t{1} << g.edges[i].first) | (std::uint64_t{1} << g.edges[i].second);
    }

    // touched[m] = vertices incident to an edge of m; f(A) counts vertices
    // touched by both A and its complement.
    const std::size_t table_size = std::size_t{1} << n;
    std::vector<std::uint64_t> touched(table_size, 0);
    for (std::size_t m = 1; m < table_size; ++m) {
        touched[m] = touched[m & (m - 1)] | endpoint_bits[std::countr_zero(m)];
    }
    std::vector<std::uint32_t> values(table_size, 0);
    const std::size_t full = table_size - 1;
    for (std::size_t m = 0; m < table_size; ++m) {
        values[m] = static_cast<std::uint32_t>(std::popcount(touched[m] & touched[full ^ m]));
    }

    if (source.empty()) source = "graph_boundary";
    return ConnectivitySystem(n, std::move(values), Provenance::graph_boundary, std::move(source));
}

AxiomReport validate_symmetric_submodular(const ConnectivitySystem& sys, const Budget& budget) {
    const std::uint32_t n = sys.ground_size();
    if (n > budget.validate_max_n) {
        throw GuardError("validation sweep refused: n = " + std::to_string(n) + " exceeds guard " +
                             std::to_string(budget.validate_max_n),
                         "validate_max_n", n, budget.validate_max_n);
    }
    const Mask full = sys.universe();
    const std::size_t table_size = std::size_t{1} << n;

    for (std::size_t m = 0; m < table_size; ++m) {
        const Mask a = static_cast<Mask>(m);
        const Mask c = a ^ full;
        if (sys.eval(a) != sys.eval(c)) {
            AxiomReport r;
            r.axiom = AxiomId::SYM;
            r.holds = false;
            r.witnesses = {a, c};
            r.note = "f" + format_subset(a) + " = " + std::to_string(sys.eval(a)) + " but f" +
                     format_subset(c) + " = " + std::to_string(sys.eval(c));
            return r;
        }
    }

    for (std::size_t ma = 0; ma < table_size; ++ma) {
        const Mask a = static_cast<Mask>(ma);
        const std::uint64_t fa = sys.eval(a);
        for (std::size_t mb = 0; mb < table_size; ++mb) {
            const Mask b = static_cast<Mask>(mb);
            const std::uint64_t lhs = fa + sys.eval(b);
            const std::uint64_t rhs = std::uint64_t{sys.eval(a & b)} + sys.eval(a | b);
            if (lhs < rhs) {
                AxiomReport r;
                r.axiom = AxiomId::SUBMOD;
                r.holds = false;
                r.witnesses = {a, b};
                r.note = "f" + format_subset(a) + " + f" + format_subset(b) + " = " + std::to_string(lhs) +
                         " < " + std::to_string(rhs) + " = f(A&B) + f(A|B)";
                return r;
            }
        }
    }

    return pass_report(AxiomId::SUBMOD, "symmetry and submodularity hold on all subsets");
}

}  // namespace connwidth
