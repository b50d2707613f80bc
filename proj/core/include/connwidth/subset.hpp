#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace connwidth {

// Subsets of a ground set {0, ..., n-1} are n-bit masks: bit i set iff
// element i is a member. n is bounded by guards well below 32.
using Mask = std::uint32_t;

constexpr Mask full_mask(std::uint32_t n) {
    return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr Mask complement_mask(Mask a, std::uint32_t n) {
    return ~a & full_mask(n);
}

constexpr bool contains_element(Mask a, std::uint32_t e) {
    return (a >> e) & 1u;
}

constexpr bool is_proper_subset(Mask a, Mask b) {
    return a != b && (a & b) == a;
}

constexpr std::uint32_t popcount(Mask a) {
    return static_cast<std::uint32_t>(std::popcount(a));
}

inline std::vector<std::uint32_t> mask_to_elements(Mask a) {
    std::vector<std::uint32_t> out;
    out.reserve(popcount(a));
    while (a != 0) {
        out.push_back(static_cast<std::uint32_t>(std::countr_zero(a)));
        a &= a - 1;
    }
    return out;
}

inline Mask elements_to_mask(const std::vector<std::uint32_t>& elems) {
    Mask a = 0;
    for (auto e : elems) a |= Mask{1} << e;
    return a;
}

// Sorted element list, e.g. "{0,2}"; the human-readable form of a mask.
inline std::string format_subset(Mask a) {
    std::string out = "{";
    bool first = true;
    while (a != 0) {
        if (!first) out += ',';
        out += std::to_string(std::countr_zero(a));
        a &= a - 1;
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace connwidth
