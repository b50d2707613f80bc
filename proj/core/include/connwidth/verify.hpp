#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "connwidth/axioms.hpp"
#include "connwidth/budget.hpp"
#include "connwidth/search.hpp"
#include "connwidth/system.hpp"

namespace connwidth {

enum class Harness {
    lemma1,
    theorem1,
    duality,
};

enum class Outcome {
    confirmed,
    mismatch,
    precondition_failed,
    budget_exceeded,
};

std::string_view to_string(Harness h);
std::string_view to_string(Outcome o);

struct SystemDesc {
    std::string name;
    std::string kind;
    std::uint32_t n = 0;
};

SystemDesc describe(const ConnectivitySystem& sys, std::string name = {});

// One family on which the two axiom-system verdicts differ. Only records
// whose verdicts reproduce under the slow-path evaluators are listed as
// genuine; slow_path_agrees=false marks an internal evaluator disagreement
// (counted separately, expected never to occur).
struct MismatchRecord {
    std::vector<Mask> family;
    bool ideal_holds = false;
    std::vector<AxiomReport> ideal_failures;
    bool obstacle_holds = false;
    std::vector<AxiomReport> obstacle_failures;
    bool slow_path_agrees = true;
};

struct SweepCounts {
    std::uint64_t families_examined = 0;
    std::uint32_t efficient_sets = 0;
    std::uint32_t pairs = 0;
    std::uint64_t mismatch_total = 0;
    std::uint64_t evaluator_disagreements = 0;
    double elapsed_ms = 0.0;  // excluded from serialized reports by default
};

struct VerificationReport {
    Harness harness = Harness::lemma1;
    SystemDesc system;
    std::optional<std::uint32_t> k;
    std::optional<IhVariant> variant;
    Outcome outcome = Outcome::confirmed;

    std::optional<std::uint32_t> lw;        // duality: computed linear-width
    Ordering lw_ordering;                   // duality: witness ordering when lw <= k
    std::optional<bool> exists_ideal;       // duality: ideal-search verdict
    std::vector<Mask> ideal_family;         // duality: witness family when one exists

    std::vector<AxiomReport> axiom_reports; // lemma1 clauses / theorem1 precondition
    std::vector<MismatchRecord> mismatches; // listed up to budget.mismatch_cap
    SweepCounts counts;
    std::string note;
};

// Lemma check: f(A) >= f(empty) = f(X) for every A, and
// f(A) + f(B) >= f(A\B) + f(B\A) for every ordered pair. Exhaustive;
// GuardError when n exceeds budget.validate_max_n.
VerificationReport check_lemma1(const ConnectivitySystem& sys, const Budget& budget = {},
                                std::string system_name = {});

// PRE: every singleton is k-efficient. Witness: first violating element.
AxiomReport precondition_singletons(const ConnectivitySystem& sys, std::uint32_t k);

// Sweeps every family of k-efficient sets and compares the single-ideal(+IE)
// verdict against the linear-obstacle verdict. Every differing family is
// re-verified by the slow-path evaluators before being listed. outcome:
// confirmed (no differences), mismatch, precondition_failed (sweep still
// runs, informational), or budget_exceeded. `jobs` > 1 partitions the index
// space into contiguous blocks merged deterministically.
VerificationReport theorem1_crosscheck(const ConnectivitySystem& sys, std::uint32_t k, IhVariant variant,
                                       const Budget& budget = {}, unsigned jobs = 1,
                                       std::string system_name = {});

// Computes LW = linear_width(sys) and searches for a single ideal (+IE) of
// order k+1; confirmed iff (LW >= k+1) matches existence. Carries the width
// ordering when LW <= k and the witness family when one exists.
VerificationReport duality_check(const ConnectivitySystem& sys, std::uint32_t k, IhVariant variant,
                                 const Budget& budget = {}, std::string system_name = {});

}  // namespace connwidth
