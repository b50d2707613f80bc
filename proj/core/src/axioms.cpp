#include "connwidth/axioms.hpp"

#include <cstddef>

namespace connwidth {

std::string_view to_string(IhVariant v) {
    return v == IhVariant::literal ? "literal" : "guarded";
}

namespace {

// Membership bitmap over all masks; one allocation per check.
struct MemberBits {
    explicit MemberBits(const ConnectivitySystem& sys, const SetFamily& family)
        : bits(std::size_t{1} << sys.ground_size(), 0) {
        for (Mask m : family) bits[m] = 1;
    }
    bool operator()(Mask m) const { return bits[m] != 0; }
    std::vector<std::uint8_t> bits;
};

std::vector<Mask> efficient_masks(const ConnectivitySystem& sys, std::uint32_t k) {
    std::vector<Mask> out;
    const std::size_t table_size = std::size_t{1} << sys.ground_size();
    for (std::size_t m = 0; m < table_size; ++m) {
        if (sys.eval(static_cast<Mask>(m)) <= k) out.push_back(static_cast<Mask>(m));
    }
    return out;
}

AxiomReport check_bound_clause(AxiomId id, const ConnectivitySystem& sys, const SetFamily& family,
                               std::uint32_t k) {
    for (Mask a : family) {
        if (sys.eval(a) > k) {
            AxiomReport r;
            r.axiom = id;
            r.holds = false;
            r.witnesses = {a};
            r.note = "member " + format_subset(a) + " has f = " + std::to_string(sys.eval(a)) + " > k = " +
                     std::to_string(k);
            return r;
        }
    }
    return pass_report(id);
}

}  // namespace

AxiomReport check_IB(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k) {
    return check_bound_clause(AxiomId::IB, sys, family, k);
}

AxiomReport check_O1(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k) {
    return check_bound_clause(AxiomId::O1, sys, family, k);
}

AxiomReport check_IH(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k,
                     IhVariant variant) {
    const MemberBits member(sys, family);
    for (Mask b : family) {
        for (Mask a = 0; a < b; ++a) {
            if ((a & b) != a) continue;
            if (variant == IhVariant::guarded && sys.eval(a) > k) continue;
            if (!member(a)) {
                AxiomReport r;
                r.axiom = AxiomId::IH;
                r.holds = false;
                r.witnesses = {a, b};
                r.note = format_subset(a) + " is a proper subset of member " + format_subset(b) +
                         " but is not a member" +
                         (variant == IhVariant::guarded
                              ? " (f = " + std::to_string(sys.eval(a)) + " <= k = " + std::to_string(k) + ")"
                              : "");
                return r;
            }
        }
    }
    return pass_report(AxiomId::IH);
}

AxiomReport check_SIS(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k) {
    const MemberBits member(sys, family);
    const std::uint32_t n = sys.ground_size();
    for (Mask a : family) {
        for (std::uint32_t e = 0; e < n; ++e) {
            if (contains_element(a, e)) continue;  // A|{e} = A, vacuous
            const Mask singleton = Mask{1} << e;
            const Mask grown = a | singleton;
            if (sys.eval(singleton) > k || sys.eval(grown) > k) continue;
            if (!member(grown)) {
                AxiomReport r;
                r.axiom = AxiomId::SIS;
                r.holds = false;
                r.witnesses = {a};
                r.element = e;
                r.note = "member " + format_subset(a) + " with element " + std::to_string(e) +
                         " demands " + format_subset(grown) + " (f = " + std::to_string(sys.eval(grown)) +
                         " <= k) which is not a member";
                return r;
            }
        }
    }
    return pass_report(AxiomId::SIS);
}

AxiomReport check_IW(const ConnectivitySystem& sys, const SetFamily& family) {
    const Mask full = sys.universe();
    if (family.contains(full)) {
        AxiomReport r;
        r.axiom = AxiomId::IW;
        r.holds = false;
        r.witnesses = {full};
        r.note = "the full ground set is a member";
        return r;
    }
    return pass_report(AxiomId::IW);
}

AxiomReport check_IE(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k) {
    const MemberBits member(sys, family);
    const Mask full = sys.universe();
    for (Mask a : efficient_masks(sys, k)) {
        const Mask c = a ^ full;
        const bool in_a = member(a);
        const bool in_c = member(c);
        if (in_a == in_c) {
            AxiomReport r;
            r.axiom = AxiomId::IE;
            r.holds = false;
            r.witnesses = {a, c};
            r.note = std::string(in_a ? "both " : "neither ") + format_subset(a) + " and its complement " +
                     format_subset(c) + (in_a ? " are members" : " is a member") + " (f = " +
                     std::to_string(sys.eval(a)) + " <= k)";
            return r;
        }
    }
    return pass_report(AxiomId::IE);
}

AxiomReport check_O2(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k) {
    const MemberBits member(sys, family);
    for (Mask b : family) {
        for (Mask a = 0; a < b; ++a) {
            if ((a & b) != a) continue;
            if (sys.eval(a) > k) continue;
            if (!member(a)) {
                AxiomReport r;
                r.axiom = AxiomId::O2;
                r.holds = false;
                r.witnesses = {a, b};
                r.note = format_subset(a) + " (f = " + std::to_string(sys.eval(a)) + " <= k) is a subset of member " +
                         format_subset(b) + " but is not a member";
                return r;
            }
        }
    }
    return pass_report(AxiomId::O2);
}

AxiomReport check_O3(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k) {
    const MemberBits member(sys, family);
    const Mask full = sys.universe();
    const std::vector<Mask> efficient = efficient_masks(sys, k);
    // Disjoint efficient pairs whose union misses at most one element; the
    // missing remainder is the minimal C completing the cover.
    for (Mask a : efficient) {
        for (Mask b : efficient) {
            if ((a & b) != 0) continue;
            const Mask rem = full ^ (a | b);
            if (popcount(rem) > 1) continue;
            if (!member(a) && !member(b)) {
                AxiomReport r;
                r.axiom = AxiomId::O3;
                r.holds = false;
                r.witnesses = {a, b, rem};
                r.note = "disjoint near-cover " + format_subset(a) + ", " + format_subset(b) + " with C = " +
                         format_subset(rem) + " has neither side as a member (f = " +
                         std::to_string(sys.eval(a)) + ", " + std::to_string(sys.eval(b)) + " <= k)";
                return r;
            }
        }
    }
    return pass_report(AxiomId::O3);
}

namespace {

template <typename... Checks>
VerdictReports run_checks(bool fail_fast, Checks&&... checks) {
    VerdictReports out;
    auto run = [&](auto&& check) {
        if (fail_fast && !out.holds) return;
        AxiomReport r = check();
        if (!r.holds) {
            out.holds = false;
            out.failures.push_back(std::move(r));
        }
    };
    (run(checks), ...);
    return out;
}

}  // namespace

VerdictReports is_single_ideal(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k,
                               IhVariant variant, bool require_ie, bool fail_fast) {
    return run_checks(
        fail_fast, [&] { return check_IB(sys, family, k); },
        [&] { return check_IH(sys, family, k, variant); }, [&] { return check_SIS(sys, family, k); },
        [&] { return check_IW(sys, family); },
        [&] { return require_ie ? check_IE(sys, family, k) : pass_report(AxiomId::IE, "not required"); });
}

VerdictReports is_linear_obstacle(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k,
                                  bool fail_fast) {
    return run_checks(
        fail_fast, [&] { return check_O1(sys, family, k); }, [&] { return check_O2(sys, family, k); },
        [&] { return check_O3(sys, family, k); });
}

bool clause_holds_at(const ConnectivitySystem& sys, const SetFamily& family, std::uint32_t k,
                     IhVariant variant, const AxiomReport& report) {
    const Mask full = sys.universe();
    const auto& w = report.witnesses;
    auto member = [&](Mask m) { return family.contains(m); };

    switch (report.axiom) {
        case AxiomId::IB:
        case AxiomId::O1: {
            if (w.size() < 1) return true;
            return !member(w[0]) || sys.eval(w[0]) <= k;
        }
        case AxiomId::IH: {
            if (w.size() < 2) return true;
            const Mask a = w[0], b = w[1];
            const bool triggered = is_proper_subset(a, b) && member(b) &&
                                   (variant == IhVariant::literal || sys.eval(a) <= k);
            return !triggered || member(a);
        }
        case AxiomId::SIS: {
            if (w.size() < 1 || !report.element) return true;
            const Mask a = w[0];
            const std::uint32_t e = *report.element;
            if (contains_element(a, e)) return true;
            const Mask singleton = Mask{1} << e;
            const bool triggered =
                member(a) && sys.eval(singleton) <= k && sys.eval(a | singleton) <= k;
            return !triggered || member(a | singleton);
        }
        case AxiomId::IW:
            return !member(full);
        case AxiomId::IE: {
            if (w.size() < 1) return true;
            const Mask a = w[0];
            if (sys.eval(a) > k) return true;
            return member(a) != member(a ^ full);
        }
        case AxiomId::O2: {
            if (w.size() < 2) return true;
            const Mask a = w[0], b = w[1];
            const bool triggered = (a & b) == a && member(b) && sys.eval(a) <= k;
            return !triggered || member(a);
        }
        case AxiomId::O3: {
            if (w.size() < 3) return true;
            const Mask a = w[0], b = w[1], c = w[2];
            const bool triggered = (a | b | c) == full && (a & b) == 0 && sys.eval(a) <= k &&
                                   sys.eval(b) <= k && popcount(c) <= 1;
            return !triggered || member(a) || member(b);
        }
        case AxiomId::SYM: {
            if (w.size() < 1) return true;
            return sys.eval(w[0]) == sys.eval(w[0] ^ full);
        }
        case AxiomId::SUBMOD: {
            if (w.size() < 2) return true;
            const Mask a = w[0], b = w[1];
            return std::uint64_t{sys.eval(a)} + sys.eval(b) >=
                   std::uint64_t{sys.eval(a & b)} + sys.eval(a | b);
        }
        case AxiomId::L1a: {
            if (w.size() >= 2) return sys.eval(0) == sys.eval(full);
            if (w.size() == 1) return sys.eval(w[0]) >= sys.eval(0);
            return true;
        }
        case AxiomId::L1b: {
            if (w.size() < 2) return true;
            const Mask a = w[0], b = w[1];
            return std::uint64_t{sys.eval(a)} + sys.eval(b) >=
                   std::uint64_t{sys.eval(a & ~b)} + sys.eval(b & ~a);
        }
        case AxiomId::PRE: {
            if (!report.element) return true;
            return sys.eval(Mask{1} << *report.element) <= k;
        }
    }
    return true;
}

}  // namespace connwidth
