#pragma once

#include <cstdint>
#include <vector>

#include "connwidth/family.hpp"
#include "connwidth/report.hpp"
#include "connwidth/system.hpp"

namespace connwidth {

// The downward-closure axiom exists in two readings. `literal` demands every
// proper subset of a member, unconditionally; `guarded` demands only proper
// subsets A with f(A) <= k, mirroring the O2 clause.
enum class IhVariant {
    literal,
    guarded,
};

std::string_view to_string(IhVariant v);

// All checkers are pure, deterministic sweeps in ascending mask order; a
// failing report carries the first witness instantiation encountered.

// IB: every member A has f(A) <= k. Witness: {A}.
AxiomReport check_IB(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k);

// IH: A proper subset of B, B a member (guarded: and f(A) <= k) implies A a
// member. Witness: {A, B}.
AxiomReport check_IH(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k,
                     IhVariant variant);

// SIS: A a member, e an element with f({e}) <= k and f(A|{e}) <= k implies
// A|{e} a member. e in A is vacuous. Witness: {A} plus element e.
AxiomReport check_SIS(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k);

// IW: the full set is not a member. Witness: {X}.
AxiomReport check_IW(const ConnectivitySystem& sys, const SetFamily& family);

// IE: for every A with f(A) <= k, exactly one of A, X\A is a member.
// Witness: {A, X\A} (note says whether both or neither were present).
AxiomReport check_IE(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k);

// O1: identical clause to IB on the same carrier. Witness: {A}.
AxiomReport check_O1(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k);

// O2: A subset of B, B a member, f(A) <= k implies A a member. Witness: {A, B}.
AxiomReport check_O2(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k);

// O3: disjoint A, B with f(A) <= k, f(B) <= k whose union misses at most one
// element (C = X\(A|B)) force A or B to be a member. Witness: {A, B, C}.
AxiomReport check_O3(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k);

// Combined verdict plus the failing reports (all of them by default; with
// fail_fast only the first).
struct VerdictReports {
    bool holds = true;
    std::vector<AxiomReport> failures;
};

// IB & IH(variant) & SIS & IW, plus IE when require_ie is set.
VerdictReports is_single_ideal(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k,
                               IhVariant variant, bool require_ie, bool fail_fast = false);

// O1 & O2 & O3.
VerdictReports is_linear_obstacle(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k,
                                  bool fail_fast = false);

// Re-evaluates the single quantified clause of `report.axiom` at the
// report's witnesses. For a sound failing report this returns false; used by
// the witness-soundness checks. Handles every AxiomId, including SYM/SUBMOD
// and the L1a/L1b/PRE clauses.
bool clause_holds_at(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k,
                     IhVariant variant, const AxiomReport& report);

}  // namespace connwidth
