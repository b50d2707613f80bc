#include "connwidth/family.hpp"

#include "connwidth/errors.hpp"

namespace connwidth {

SetFamily SetFamily::from_masks(std::vector<Mask> masks, std::uint32_t ground_size) {
    const Mask full = full_mask(ground_size);
    for (Mask m : masks) {
        if (m > full) {
            throw InputError("family member mask " + std::to_string(m) + " is out of range for n = " +
                             std::to_string(ground_size));
        }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    SetFamily f;
    f.members_ = std::move(masks);
    return f;
}

SetFamily SetFamily::from_sorted_unique(std::vector<Mask> masks) {
    SetFamily f;
    f.members_ = std::move(masks);
    return f;
}

}  // namespace connwidth
