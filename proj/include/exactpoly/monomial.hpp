#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace exactpoly {

constexpr std::size_t kMaxVars = 48;

// Packed exponent vector. Ordering is graded lex: total degree first, then
// lexicographic on the exponents with variable 0 the largest.
struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint16_t deg = 0;

    std::uint8_t operator[](std::size_t i) const { return e[i]; }

    void set(std::size_t i, int v) {
        deg = static_cast<std::uint16_t>(deg - e[i] + v);
        e[i] = static_cast<std::uint8_t>(v);
    }
    void bump(std::size_t i, int by) { set(i, e[i] + by); }

    bool operator==(const Mono& o) const { return deg == o.deg && e == o.e; }
    bool operator!=(const Mono& o) const { return !(*this == o); }
    bool operator<(const Mono& o) const {
        if (deg != o.deg) return deg < o.deg;
        return e < o.e;
    }
    bool operator>(const Mono& o) const { return o < *this; }

    Mono operator*(const Mono& o) const {
        Mono r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
        r.deg = static_cast<std::uint16_t>(deg + o.deg);
        return r;
    }
    bool divisible_by(const Mono& o) const {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i] < o.e[i]) return false;
        return true;
    }
};

struct MonoHash {
    std::size_t operator()(const Mono& m) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto b : m.e) {
            h ^= b;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace exactpoly

template <>
struct std::hash<exactpoly::Mono> {
    std::size_t operator()(const exactpoly::Mono& m) const noexcept { return exactpoly::MonoHash{}(m); }
};
