#include "levy/dyadic.hpp"

#include <cmath>

#include "levy/bigint.hpp"

namespace levy {

double Dyadic::to_double() const {
    return std::ldexp(static_cast<double>(num_), -exp_);
}

std::string Dyadic::to_decimal_string() const {
    // num / 2^exp == num * 5^exp / 10^exp, which is a finite decimal.
    BigInt digits = num_;
    for (std::int32_t i = 0; i < exp_; ++i) digits *= 5;
    const bool negative = digits < 0;
    if (negative) digits = -digits;
    std::string s = digits.str();
    const std::size_t places = static_cast<std::size_t>(exp_);
    if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
    std::string out = negative ? "-" : "";
    out += s.substr(0, s.size() - places);
    if (places > 0) {
        out += '.';
        out += s.substr(s.size() - places);
    }
    return out;
}

}  // namespace levy
