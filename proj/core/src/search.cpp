#include "connwidth/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "connwidth/errors.hpp"

namespace connwidth {

SetFamily efficient_sets(const ConnectivitySystem& sys, std::uint32_t k) {
    std::vector<Mask> out;
    const std::size_t table_size = std::size_t{1} << sys.ground_size();
    for (std::size_t m = 0; m < table_size; ++m) {
        if (sys.eval(static_cast<Mask>(m)) <= k) out.push_back(static_cast<Mask>(m));
    }
    return SetFamily::from_sorted_unique(std::move(out));
}

WidthResult linear_width(const ConnectivitySystem& sys, const Budget& budget) {
    const std::uint32_t n = sys.ground_size();
    if (n > budget.dp_max_n) {
        throw GuardError("linear-width DP refused: n = " + std::to_string(n) + " exceeds guard " +
                             std::to_string(budget.dp_max_n),
                         "dp_max_n", n, budget.dp_max_n);
    }

    const std::size_t table_size = std::size_t{1} << n;
    // dp[S] = best achievable max prefix value over orderings that place the
    // elements of S first; f(S) itself is one of those prefixes.
    std::vector<std::uint32_t> dp(table_size, 0);
    for (std::size_t m = 1; m < table_size; ++m) {
        std::uint32_t best = ~std::uint32_t{0};
        for (std::size_t t = m; t != 0; t &= t - 1) {
            const std::size_t without = m ^ (t & -t);
            best = std::min(best, dp[without]);
        }
        dp[m] = std::max(best, sys.eval(static_cast<Mask>(m)));
    }

    WidthResult result;
    result.width = dp[table_size - 1];
    result.ordering.assign(n, 0);
    // Walk back from the full set, peeling the lowest-indexed element whose
    // removal preserves optimality.
    Mask current = sys.universe();
    for (std::uint32_t pos = n; pos-- > 0;) {
        for (std::uint32_t e = 0; e < n; ++e) {
            const Mask bit = Mask{1} << e;
            if (!(current & bit)) continue;
            if (std::max(dp[current ^ bit], sys.eval(current)) == dp[current]) {
                result.ordering[pos] = e;
                current ^= bit;
                break;
            }
        }
    }
    return result;
}

WidthResult linear_width_bruteforce(const ConnectivitySystem& sys, const Budget& budget) {
    const std::uint32_t n = sys.ground_size();
    if (n > budget.bruteforce_max_n) {
        throw GuardError("factorial width oracle refused: n = " + std::to_string(n) + " exceeds guard " +
                             std::to_string(budget.bruteforce_max_n),
                         "bruteforce_max_n", n, budget.bruteforce_max_n);
    }

    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    WidthResult best;
    best.width = ~std::uint32_t{0};
    do {
        Mask prefix = 0;
        std::uint32_t worst = 0;
        for (std::uint32_t e : perm) {
            prefix |= Mask{1} << e;
            worst = std::max(worst, sys.eval(prefix));
            if (worst >= best.width) break;  // cannot improve
        }
        if (worst < best.width) {
            best.width = worst;
            best.ordering = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

FamilyEnumerator::FamilyEnumerator(const ConnectivitySystem& sys, std::uint32_t k, const Budget& budget,
                                   EnumOptions options)
    : sys_(sys), k_(k), options_(options), efficient_(efficient_sets(sys, k)) {
    if (efficient_.size() > budget.max_efficient) {
        throw GuardError("family enumeration refused: " + std::to_string(efficient_.size()) +
                             " k-efficient sets exceed guard " + std::to_string(budget.max_efficient),
                         "max_efficient", efficient_.size(), budget.max_efficient);
    }
}

SetFamily family_at_index(const SetFamily& efficient, std::uint64_t index) {
    std::vector<Mask> members;
    members.reserve(static_cast<std::size_t>(std::popcount(index)));
    const auto& pool = efficient.members();
    for (std::uint64_t bits = index; bits != 0; bits &= bits - 1) {
        members.push_back(pool[std::countr_zero(bits)]);
    }
    // pool is ascending, so selecting in bit order preserves canonical order
    return SetFamily::from_sorted_unique(std::move(members));
}

std::optional<SetFamily> FamilyEnumerator::next() {
    const std::uint64_t total = total_families();
    while (next_index_ < total) {
        SetFamily family = family_at_index(efficient_, next_index_++);
        if (options_.require_ib && !check_IB(sys_, family, k_).holds) continue;
        if (options_.require_guarded_ih && !check_IH(sys_, family, k_, IhVariant::guarded).holds) continue;
        return family;
    }
    return std::nullopt;
}

namespace {

// Backtracking state for the IE-constrained ideal search. IE restricts a
// candidate family to exactly one side of each complement pair of
// k-efficient sets; IW bans the full set; IH- and SIS-closure run as unit
// propagation after every decision.
class IdealSearch {
public:
    IdealSearch(const ConnectivitySystem& sys, std::uint32_t k, IhVariant variant)
        : sys_(sys), k_(k), variant_(variant), full_(sys.universe()) {
        const auto efficient = efficient_sets(sys, k);
        pair_of_.assign(std::size_t{1} << sys_.ground_size(), kNoPair);
        for (Mask a : efficient) {
            const Mask c = a ^ full_;
            if (a < c) {
                pair_lo_.push_back(a);
                pair_of_[a] = static_cast<std::uint32_t>(pair_lo_.size() - 1);
                pair_of_[c] = static_cast<std::uint32_t>(pair_lo_.size() - 1);
            }
        }
        // Cheapest pairs first; unit propagation then prunes most branches.
        order_.resize(pair_lo_.size());
        std::iota(order_.begin(), order_.end(), 0u);
        std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t x, std::uint32_t y) {
            const std::uint32_t fx = std::min(sys_.eval(pair_lo_[x]), sys_.eval(pair_lo_[x] ^ full_));
            const std::uint32_t fy = std::min(sys_.eval(pair_lo_[y]), sys_.eval(pair_lo_[y] ^ full_));
            if (fx != fy) return fx < fy;
            return pair_lo_[x] < pair_lo_[y];
        });
        chosen_.assign(pair_lo_.size(), kUnset);
    }

    std::size_t pair_count() const { return pair_lo_.size(); }

    std::optional<SetFamily> run() {
        if (!dfs(0)) return std::nullopt;
        std::vector<Mask> members;
        members.reserve(chosen_.size());
        for (std::size_t p = 0; p < chosen_.size(); ++p) {
            members.push_back(chosen_[p] == kLow ? pair_lo_[p] : (pair_lo_[p] ^ full_));
        }
        std::sort(members.begin(), members.end());
        return SetFamily::from_sorted_unique(std::move(members));
    }

private:
    static constexpr std::uint32_t kNoPair = ~std::uint32_t{0};
    static constexpr std::uint8_t kUnset = 0, kLow = 1, kHigh = 2;

    bool dfs(std::size_t order_pos) {
        while (order_pos < order_.size() && chosen_[order_[order_pos]] != kUnset) ++order_pos;
        if (order_pos == order_.size()) return true;
        const std::uint32_t pair = order_[order_pos];
        for (std::uint8_t side : {kLow, kHigh}) {
            const std::size_t trail_mark = trail_.size();
            if (assign(pair, side) && dfs(order_pos + 1)) return true;
            undo_to(trail_mark);
        }
        return false;
    }

    // Chooses one side of a pair and propagates closure; false on conflict.
    bool assign(std::uint32_t pair, std::uint8_t side) {
        if (!set_choice(pair, side)) return false;
        std::size_t queue_pos = trail_.size() - 1;
        while (queue_pos < trail_.size()) {
            const Mask m = member_of(trail_[queue_pos], chosen_[trail_[queue_pos]]);
            ++queue_pos;
            if (!propagate_from(m)) return false;
        }
        return true;
    }

    Mask member_of(std::uint32_t pair, std::uint8_t side) const {
        return side == kLow ? pair_lo_[pair] : (pair_lo_[pair] ^ full_);
    }

    bool set_choice(std::uint32_t pair, std::uint8_t side) {
        if (chosen_[pair] != kUnset) return chosen_[pair] == side;
        if (member_of(pair, side) == full_) return false;  // IW
        chosen_[pair] = side;
        trail_.push_back(pair);
        return true;
    }

    bool require_member(Mask m) {
        if (sys_.eval(m) > k_) return false;  // IB: cannot belong to any candidate
        const std::uint32_t pair = pair_of_[m];
        return set_choice(pair, m == pair_lo_[pair] ? kLow : kHigh);
    }

    bool propagate_from(Mask m) {
        // IH-closure: proper subsets (all of them in literal mode, the
        // k-efficient ones in guarded mode) must be members.
        if (m != 0) {
            for (Mask a = (m - 1) & m;; a = (a - 1) & m) {
                const bool demanded = variant_ == IhVariant::literal || sys_.eval(a) <= k_;
                if (demanded && !require_member(a)) return false;
                if (a == 0) break;
            }
        }
        // SIS-closure: efficient one-element extensions must be members.
        const std::uint32_t n = sys_.ground_size();
        for (std::uint32_t e = 0; e < n; ++e) {
            const Mask bit = Mask{1} << e;
            if (m & bit) continue;
            if (sys_.eval(bit) > k_ || sys_.eval(m | bit) > k_) continue;
            if (!require_member(m | bit)) return false;
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            chosen_[trail_.back()] = kUnset;
            trail_.pop_back();
        }
    }

    const ConnectivitySystem& sys_;
    std::uint32_t k_;
    IhVariant variant_;
    Mask full_;
    std::vector<Mask> pair_lo_;
    std::vector<std::uint32_t> pair_of_;
    std::vector<std::uint32_t> order_;
    std::vector<std::uint8_t> chosen_;
    std::vector<std::uint32_t> trail_;
};

}  // namespace

std::optional<SetFamily> find_single_ideal_with_IE(const ConnectivitySystem& sys, std::uint32_t k,
                                                   IhVariant variant, const Budget& budget) {
    IdealSearch search(sys, k, variant);
    if (search.pair_count() > budget.max_pairs) {
        throw GuardError("ideal search refused: " + std::to_string(search.pair_count()) +
                             " complement pairs exceed guard " + std::to_string(budget.max_pairs),
                         "max_pairs", search.pair_count(), budget.max_pairs);
    }
    auto found = search.run();
    if (found) {
        // Propagation is closure-complete, so this re-check is a cheap
        // internal consistency gate.
        auto verdict = is_single_ideal(sys, *found, k, variant, /*require_ie=*/true);
        if (!verdict.holds) {
            throw Error("ideal search returned a family failing re-verification");
        }
    }
    return found;
}

}  // namespace connwidth
