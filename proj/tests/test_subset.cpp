#include <doctest.h>

#include "connwidth/graph.hpp"
#include "connwidth/subset.hpp"

using namespace connwidth;

TEST_SUITE("subset") {

TEST_CASE("full and complement masks") {
    CHECK(full_mask(1) == 0x1u);
    CHECK(full_mask(4) == 0xFu);
    CHECK(complement_mask(0b0101, 4) == 0b1010);
    CHECK(complement_mask(0, 3) == 0b111);
}

TEST_CASE("complement is an involution") {
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto n = static_cast<std::uint32_t>(1 + rng.next_below(24));
        const Mask a = static_cast<Mask>(rng.next() & full_mask(n));
        CHECK(complement_mask(complement_mask(a, n), n) == a);
    }
}

TEST_CASE("proper subset relation") {
    CHECK(is_proper_subset(0b001, 0b011));
    CHECK(is_proper_subset(0, 0b1));
    CHECK_FALSE(is_proper_subset(0b011, 0b011));
    CHECK_FALSE(is_proper_subset(0b100, 0b011));
}

TEST_CASE("element list round trip") {
    const Mask a = 0b10110;
    const auto elems = mask_to_elements(a);
    CHECK(elems == std::vector<std::uint32_t>{1, 2, 4});
    CHECK(elements_to_mask(elems) == a);
    CHECK(format_subset(a) == "{1,2,4}");
    CHECK(format_subset(0) == "{}");
}

}  // TEST_SUITE
