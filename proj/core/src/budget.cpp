#include "connwidth/budget.hpp"

#include <charconv>
#include <cstdlib>

#include "connwidth/errors.hpp"

namespace connwidth {

namespace {

std::uint32_t parse_u32(std::string_view text, std::string_view key) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InputError("budget override '" + std::string(key) + "': bad value '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

void Budget::apply(std::string_view key_eq_val) {
    auto eq = key_eq_val.find('=');
    if (eq == std::string_view::npos) {
        throw InputError("budget override '" + std::string(key_eq_val) + "': expected key=value");
    }
    std::string_view key = key_eq_val.substr(0, eq);
    std::string_view val = key_eq_val.substr(eq + 1);

    if (key == "table_max_n") {
        table_max_n = parse_u32(val, key);
    } else if (key == "validate_max_n") {
        validate_max_n = parse_u32(val, key);
    } else if (key == "dp_max_n") {
        dp_max_n = parse_u32(val, key);
    } else if (key == "bruteforce_max_n") {
        bruteforce_max_n = parse_u32(val, key);
    } else if (key == "max_efficient") {
        max_efficient = parse_u32(val, key);
    } else if (key == "max_pairs") {
        max_pairs = parse_u32(val, key);
    } else if (key == "mismatch_cap") {
        mismatch_cap = parse_u32(val, key);
    } else {
        throw InputError("budget override: unknown key '" + std::string(key) + "'");
    }
}

void Budget::apply_list(std::string_view list) {
    while (!list.empty()) {
        auto comma = list.find(',');
        std::string_view item = list.substr(0, comma);
        if (!item.empty()) apply(item);
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
}

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("CONNWIDTH_GUARDS")) {
        b.apply_list(env);
    }
    return b;
}

}  // namespace connwidth
