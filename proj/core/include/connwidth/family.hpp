#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "connwidth/subset.hpp"

namespace connwidth {

// Deduplicated collection of subsets in ascending-mask order. The canonical
// carrier for both axiom systems.
class SetFamily {
public:
    SetFamily() = default;

    // Sorts, deduplicates, and checks every mask against the ground size.
    static SetFamily from_masks(std::vector<Mask> masks, std::uint32_t ground_size);

    // Faster path for masks already strictly ascending and range-checked.
    static SetFamily from_sorted_unique(std::vector<Mask> masks);

    bool contains(Mask a) const {
        return std::binary_search(members_.begin(), members_.end(), a);
    }

    const std::vector<Mask>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    std::vector<Mask> members_;
};

}  // namespace connwidth
