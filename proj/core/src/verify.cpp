#include "connwidth/verify.hpp"

#include <chrono>
#include <thread>

#include "connwidth/errors.hpp"
#include "connwidth/slow_eval.hpp"

namespace connwidth {

std::string_view to_string(Harness h) {
    switch (h) {
        case Harness::lemma1: return "lemma1";
        case Harness::theorem1: return "theorem1";
        case Harness::duality: return "duality";
    }
    return "?";
}

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::confirmed: return "confirmed";
        case Outcome::mismatch: return "mismatch";
        case Outcome::precondition_failed: return "precondition_failed";
        case Outcome::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

SystemDesc describe(const ConnectivitySystem& sys, std::string name) {
    SystemDesc d;
    d.name = name.empty() ? sys.source() : std::move(name);
    d.kind = std::string(to_string(sys.provenance()));
    d.n = sys.ground_size();
    return d;
}

namespace {

constexpr const char* kS4Note = "axiom (S4) interpreted as (IE)";

using Clock = std::chrono::steady_clock;

double elapsed_ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

VerificationReport check_lemma1(const ConnectivitySystem& sys, const Budget& budget,
                                std::string system_name) {
    const auto start = Clock::now();
    const std::uint32_t n = sys.ground_size();
    if (n > budget.validate_max_n) {
        throw GuardError("lemma sweep refused: n = " + std::to_string(n) + " exceeds guard " +
                             std::to_string(budget.validate_max_n),
                         "validate_max_n", n, budget.validate_max_n);
    }

    VerificationReport report;
    report.harness = Harness::lemma1;
    report.system = describe(sys, std::move(system_name));
    report.note = kS4Note;

    const Mask full = sys.universe();
    const std::size_t table_size = std::size_t{1} << n;
    const std::uint32_t at_empty = sys.eval(0);

    // Part 1: f(A) >= f(empty) = f(X).
    AxiomReport part1 = pass_report(AxiomId::L1a, "f(A) >= f(empty) = f(X) for all A");
    if (sys.eval(full) != at_empty) {
        part1.holds = false;
        part1.witnesses = {Mask{0}, full};
        part1.note = "f(empty) = " + std::to_string(at_empty) + " differs from f(X) = " +
                     std::to_string(sys.eval(full));
    } else {
        for (std::size_t m = 0; m < table_size; ++m) {
            if (sys.eval(static_cast<Mask>(m)) < at_empty) {
                part1.holds = false;
                part1.witnesses = {static_cast<Mask>(m)};
                part1.note = "f" + format_subset(static_cast<Mask>(m)) + " = " +
                             std::to_string(sys.eval(static_cast<Mask>(m))) + " < f(empty) = " +
                             std::to_string(at_empty);
                break;
            }
        }
    }
    report.axiom_reports.push_back(part1);

    // Part 2: f(A) + f(B) >= f(A\B) + f(B\A).
    AxiomReport part2 = pass_report(AxiomId::L1b, "f(A) + f(B) >= f(A\\B) + f(B\\A) for all A, B");
    for (std::size_t ma = 0; ma < table_size && part2.holds; ++ma) {
        const Mask a = static_cast<Mask>(ma);
        const std::uint64_t fa = sys.eval(a);
        for (std::size_t mb = 0; mb < table_size; ++mb) {
            const Mask b = static_cast<Mask>(mb);
            const std::uint64_t lhs = fa + sys.eval(b);
            const std::uint64_t rhs = std::uint64_t{sys.eval(a & ~b)} + sys.eval(b & ~a);
            if (lhs < rhs) {
                part2.holds = false;
                part2.witnesses = {a, b};
                part2.note = "f" + format_subset(a) + " + f" + format_subset(b) + " = " +
                             std::to_string(lhs) + " < " + std::to_string(rhs) +
                             " = f(A\\B) + f(B\\A)";
                break;
            }
        }
    }
    report.axiom_reports.push_back(part2);

    report.outcome = (part1.holds && part2.holds) ? Outcome::confirmed : Outcome::mismatch;
    report.counts.families_examined = 0;
    report.counts.elapsed_ms = elapsed_ms_since(start);
    return report;
}

AxiomReport precondition_singletons(const ConnectivitySystem& sys, std::uint32_t k) {
    for (std::uint32_t e = 0; e < sys.ground_size(); ++e) {
        const Mask s = Mask{1} << e;
        if (sys.eval(s) > k) {
            AxiomReport r;
            r.axiom = AxiomId::PRE;
            r.holds = false;
            r.witnesses = {s};
            r.element = e;
            r.note = "f({" + std::to_string(e) + "}) = " + std::to_string(sys.eval(s)) + " > k = " +
                     std::to_string(k);
            return r;
        }
    }
    return pass_report(AxiomId::PRE, "every singleton is k-efficient");
}

namespace {

struct BlockResult {
    std::uint64_t mismatch_total = 0;
    std::uint64_t disagreements = 0;
    std::vector<MismatchRecord> listed;  // capped per block
};

BlockResult sweep_block(const ConnectivitySystem& sys, const SetFamily& efficient, std::uint32_t k,
                        IhVariant variant, std::uint64_t begin, std::uint64_t end, std::uint32_t cap) {
    BlockResult out;
    for (std::uint64_t index = begin; index < end; ++index) {
        const SetFamily family = family_at_index(efficient, index);
        const VerdictReports ideal = is_single_ideal(sys, family, k, variant, /*require_ie=*/true);
        const VerdictReports obstacle = is_linear_obstacle(sys, family, k);
        if (ideal.holds == obstacle.holds) continue;

        const bool slow_ideal = slowpath::is_single_ideal(sys, family.members(), k, variant, true);
        const bool slow_obstacle = slowpath::is_linear_obstacle(sys, family.members(), k);
        const bool agrees = (slow_ideal == ideal.holds) && (slow_obstacle == obstacle.holds);

        if (!agrees) {
            // An evaluator bug, not a theorem counterexample; counted and
            // surfaced through the outcome, never listed as a mismatch.
            ++out.disagreements;
            continue;
        }
        ++out.mismatch_total;
        if (out.listed.size() < cap) {
            MismatchRecord rec;
            rec.family = family.members();
            rec.ideal_holds = ideal.holds;
            rec.ideal_failures = ideal.failures;
            rec.obstacle_holds = obstacle.holds;
            rec.obstacle_failures = obstacle.failures;
            rec.slow_path_agrees = true;
            out.listed.push_back(std::move(rec));
        }
    }
    return out;
}

}  // namespace

VerificationReport theorem1_crosscheck(const ConnectivitySystem& sys, std::uint32_t k, IhVariant variant,
                                       const Budget& budget, unsigned jobs, std::string system_name) {
    const auto start = Clock::now();

    VerificationReport report;
    report.harness = Harness::theorem1;
    report.system = describe(sys, std::move(system_name));
    report.k = k;
    report.variant = variant;
    report.note = kS4Note;

    const AxiomReport precondition = precondition_singletons(sys, k);
    report.axiom_reports.push_back(precondition);

    const SetFamily efficient = efficient_sets(sys, k);
    report.counts.efficient_sets = static_cast<std::uint32_t>(efficient.size());
    if (efficient.size() > budget.max_efficient) {
        report.outcome = Outcome::budget_exceeded;
        report.note += "; " + std::to_string(efficient.size()) + " k-efficient sets exceed guard " +
                       std::to_string(budget.max_efficient);
        report.counts.elapsed_ms = elapsed_ms_since(start);
        return report;
    }

    const std::uint64_t total = std::uint64_t{1} << efficient.size();
    report.counts.families_examined = total;

    // Contiguous index blocks, merged in block order: the output is
    // byte-identical for every job count.
    const unsigned workers = std::max(1u, jobs);
    std::vector<BlockResult> results(workers);
    if (workers == 1) {
        results[0] = sweep_block(sys, efficient, k, variant, 0, total, budget.mismatch_cap);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min<std::uint64_t>(total, w * chunk);
            const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
            threads.emplace_back([&, w, begin, end] {
                results[w] = sweep_block(sys, efficient, k, variant, begin, end, budget.mismatch_cap);
            });
        }
        for (auto& t : threads) t.join();
    }

    for (auto& block : results) {
        report.counts.mismatch_total += block.mismatch_total;
        report.counts.evaluator_disagreements += block.disagreements;
        for (auto& rec : block.listed) {
            if (report.mismatches.size() >= budget.mismatch_cap) break;
            report.mismatches.push_back(std::move(rec));
        }
    }

    if (!precondition.holds) {
        report.outcome = Outcome::precondition_failed;
        report.note += "; singleton precondition failed, sweep results are informational";
    } else if (report.counts.mismatch_total > 0 || report.counts.evaluator_disagreements > 0) {
        report.outcome = Outcome::mismatch;
    } else {
        report.outcome = Outcome::confirmed;
    }
    report.counts.elapsed_ms = elapsed_ms_since(start);
    return report;
}

VerificationReport duality_check(const ConnectivitySystem& sys, std::uint32_t k, IhVariant variant,
                                 const Budget& budget, std::string system_name) {
    const auto start = Clock::now();

    VerificationReport report;
    report.harness = Harness::duality;
    report.system = describe(sys, std::move(system_name));
    report.k = k;
    report.variant = variant;
    report.note = kS4Note;

    report.axiom_reports.push_back(precondition_singletons(sys, k));

    try {
        const WidthResult width = linear_width(sys, budget);
        report.lw = width.width;
        if (width.width <= k) report.lw_ordering = width.ordering;

        const SetFamily efficient = efficient_sets(sys, k);
        report.counts.efficient_sets = static_cast<std::uint32_t>(efficient.size());
        report.counts.pairs = static_cast<std::uint32_t>(efficient.size() / 2);

        const auto ideal = find_single_ideal_with_IE(sys, k, variant, budget);
        report.exists_ideal = ideal.has_value();
        if (ideal) report.ideal_family = ideal->members();
        if (efficient.empty()) {
            report.note += "; k < f(empty): no k-efficient sets, the empty family is the (vacuous) ideal";
        }

        const bool width_at_least = width.width >= k + 1;
        report.outcome = (width_at_least == ideal.has_value()) ? Outcome::confirmed : Outcome::mismatch;
    } catch (const GuardError& e) {
        report.outcome = Outcome::budget_exceeded;
        report.note += std::string("; ") + e.what();
    }

    report.counts.elapsed_ms = elapsed_ms_since(start);
    return report;
}

}  // namespace connwidth
