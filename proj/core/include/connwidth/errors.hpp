#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace connwidth {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (bad table length, self-loop, mask out of
// range, schema violation, ...).
struct InputError : Error {
    using Error::Error;
};

// A configured guard refused the computation. `count` is the offending
// quantity (ground-set size, efficient-set count, pair count) so callers can
// shrink the instance or raise the guard.
struct GuardError : Error {
    GuardError(const std::string& what, std::string guard_name, std::uint64_t count_, std::uint64_t limit_)
        : Error(what), guard(std::move(guard_name)), count(count_), limit(limit_) {}

    std::string guard;
    std::uint64_t count = 0;
    std::uint64_t limit = 0;
};

}  // namespace connwidth
