#pragma once

#include <cstdint>
#include <map>

#include "levy/bigint.hpp"

namespace levy {

/// Neighborhood occupancy code: bit i-1 records whether star entry i is
/// occupied, so codes range over 0..32767. Odd code <=> the triangle
/// itself is occupied; all bits set <=> the triangle is covered.
using TypeCode = std::uint16_t;

inline constexpr int kTypeBits = 15;
inline constexpr std::uint32_t kTypeSpace = 1u << kTypeBits;        // 32768
inline constexpr TypeCode kCoveredType = static_cast<TypeCode>(kTypeSpace - 1);  // 32767

inline bool is_boundary_type(TypeCode c) {
    return (c & 1u) != 0 && c != kCoveredType;
}

/// Count of triangles per neighborhood type. Zero counts are never
/// stored; counts are arbitrary precision.
struct TypeCensus {
    std::map<TypeCode, BigInt> counts;

    void add(TypeCode code, const BigInt& n) {
        if (n == 0) return;
        auto it = counts.find(code);
        if (it == counts.end()) {
            counts.emplace(code, n);
        } else {
            it->second += n;
            if (it->second == 0) counts.erase(it);
        }
    }

    const BigInt& at(TypeCode code) const {
        static const BigInt zero{0};
        auto it = counts.find(code);
        return it == counts.end() ? zero : it->second;
    }

    BigInt total() const {
        BigInt sum = 0;
        for (const auto& [code, n] : counts) sum += n;
        return sum;
    }

    friend bool operator==(const TypeCensus& a, const TypeCensus& b) {
        return a.counts == b.counts;
    }
};

}  // namespace levy
