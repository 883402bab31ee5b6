#pragma once

// Exact rational time arithmetic. All clock constants, interval bounds and
// plan timings are rationals so that region construction and guard checks
// never see rounding.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ritl {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline Rat rat(long long n, long long d = 1) { return Rat(BigInt(n), BigInt(d)); }

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rat_floor(const Rat& r) { return floor_div(r.numerator(), r.denominator()); }

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline BigInt gcd_big(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { BigInt t = a % b; a = b; b = t; }
    return a;
}

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    BigInt g = gcd_big(a, b);
    BigInt l = (a / g) * b;
    return l < 0 ? -l : l;
}

// Parses "a/b", plain integers, and decimal literals ("0.35") exactly.
inline std::optional<Rat> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        try {
            BigInt n(text.substr(0, slash));
            BigInt d(text.substr(slash + 1));
            if (d == 0) return std::nullopt;
            return Rat(n, d);
        } catch (...) {
            return std::nullopt;
        }
    }
    auto dot = text.find('.');
    try {
        if (dot == std::string::npos) return Rat(BigInt(text), BigInt(1));
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.empty()) return std::nullopt;
        bool neg = !whole.empty() && whole[0] == '-';
        if (whole == "-" || whole.empty()) whole = neg ? "-0" : "0";
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt num = BigInt(whole) * scale;
        BigInt f(frac);
        num += neg ? -f : f;
        return Rat(num, scale);
    } catch (...) {
        return std::nullopt;
    }
}

inline std::string to_string(const Rat& r) {
    std::string s = r.numerator().str();
    if (r.denominator() != 1) s += "/" + r.denominator().str();
    return s;
}

}  // namespace ritl
