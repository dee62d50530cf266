#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kacpal {

/// Group-order limits (n^m * m!) per check family.
struct Caps {
    std::uint64_t relations = 10000;
    std::uint64_t ranks = 2000;
    std::uint64_t hopf = 100;
    std::uint64_t conjugacy = 10000;

    /// Replaces every cap with one value.
    static Caps uniform(std::uint64_t cap) { return Caps{cap, cap, cap, cap}; }

    /// Defaults, or uniform(KACPAL_CAP) when that variable holds a positive integer.
    static Caps from_env() {
        const char* raw = std::getenv("KACPAL_CAP");
        if (raw == nullptr || *raw == '\0') return Caps{};
        try {
            std::size_t pos = 0;
            const unsigned long long v = std::stoull(raw, &pos);
            if (pos != std::string(raw).size() || v == 0) throw std::invalid_argument("bad");
            return uniform(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("KACPAL_CAP must be a positive integer, got '") + raw + "'");
        }
    }
};

}  // namespace kacpal
