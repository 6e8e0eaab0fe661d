#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <string>

namespace levy {

/// Exact dyadic rational num / 2^exp, kept in canonical lowest terms:
/// num is odd, or num == 0 and exp == 0. Canonical form makes value
/// equality identical to representation equality, which the occupancy
/// hash set depends on. No operation ever rounds.
class Dyadic {
public:
    constexpr Dyadic() = default;

    Dyadic(std::int64_t numerator, std::int32_t exponent) : num_(numerator), exp_(exponent) {
        assert(exponent >= 0);
        normalize();
    }

    static Dyadic from_int(std::int64_t n) { return Dyadic(n, 0); }

    std::int64_t num() const { return num_; }
    std::int32_t exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }

    Dyadic operator-() const {
        Dyadic r;
        r.num_ = -num_;
        r.exp_ = exp_;
        return r;
    }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        const std::int32_t e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        return Dyadic(shifted(a, e) + shifted(b, e), e);
    }

    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
        const std::int32_t e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        return Dyadic(shifted(a, e) - shifted(b, e), e);
    }

    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
#ifndef NDEBUG
        const __int128 wide = static_cast<__int128>(a.num_) * b.num_;
        assert(wide == static_cast<__int128>(static_cast<std::int64_t>(wide)) && "dyadic product overflow");
#endif
        return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
    }

    /// Exact division by two.
    Dyadic half() const { return Dyadic(num_, exp_ + 1); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num_ == b.num_ && a.exp_ == b.exp_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        const std::int32_t e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        return shifted(a, e) < shifted(b, e);
    }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    double to_double() const;

    /// Exact finite decimal, e.g. (-3, 2) -> "-0.75".
    std::string to_decimal_string() const;

private:
    static std::int64_t shifted(const Dyadic& d, std::int32_t to_exp) {
        assert(to_exp >= d.exp_ && to_exp - d.exp_ < 62);
        return d.num_ << (to_exp - d.exp_);
    }

    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    std::int64_t num_ = 0;
    std::int32_t exp_ = 0;
};

struct DyadicPoint {
    Dyadic x;
    Dyadic y;

    friend bool operator==(const DyadicPoint& a, const DyadicPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const DyadicPoint& a, const DyadicPoint& b) { return !(a == b); }

    friend DyadicPoint operator+(const DyadicPoint& a, const DyadicPoint& b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend DyadicPoint operator-(const DyadicPoint& a, const DyadicPoint& b) {
        return {a.x - b.x, a.y - b.y};
    }
};

inline DyadicPoint midpoint(const DyadicPoint& a, const DyadicPoint& b) {
    return {(a.x + b.x).half(), (a.y + b.y).half()};
}

/// 2D cross product (signed parallelogram area), exact.
inline Dyadic cross(const DyadicPoint& u, const DyadicPoint& v) {
    return u.x * v.y - u.y * v.x;
}

inline Dyadic dot(const DyadicPoint& u, const DyadicPoint& v) {
    return u.x * v.x + u.y * v.y;
}

inline Dyadic squared_distance(const DyadicPoint& a, const DyadicPoint& b) {
    const DyadicPoint d = a - b;
    return dot(d, d);
}

inline std::size_t hash_mix(std::size_t h, std::uint64_t v) {
    // splitmix64 step folded into a running hash
    v += 0x9e3779b97f4a7c15ull + h;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(v ^ (v >> 31));
}

struct DyadicHash {
    std::size_t operator()(const Dyadic& d) const {
        std::size_t h = hash_mix(0, static_cast<std::uint64_t>(d.num()));
        return hash_mix(h, static_cast<std::uint64_t>(d.exp()));
    }
};

struct DyadicPointHash {
    std::size_t operator()(const DyadicPoint& p) const {
        DyadicHash h;
        return hash_mix(h(p.x), h(p.y));
    }
};

}  // namespace levy
