#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace herbrand {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in lowest terms with a
// positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_floor(const Rat& q) {
    Int n = numerator(q);
    Int d = denominator(q);  // > 0 by representation
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Int rat_ceil(const Rat& q) {
    Int n = numerator(q);
    Int d = denominator(q);
    Int t = n / d;
    if (n > 0 && t * d != n) ++t;
    return t;
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline Int int_pow(Int base, Int exp) {
    Int result = 1;
    while (exp > 0) {
        if ((exp & 1) != 0) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

// True if x = p^k for some k >= 0 (so 1 always qualifies).
inline bool is_power_of(Int x, const Int& p) {
    if (x < 1) return false;
    while (x % p == 0) x /= p;
    return x == 1;
}

namespace detail {

inline Int mod_pow(Int base, Int exp, const Int& mod) {
    Int result = 1;
    base %= mod;
    while (exp > 0) {
        if ((exp & 1) != 0) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

}  // namespace detail

// Miller-Rabin with a fixed base set; deterministic for every n < 3.3e24,
// which covers any residue characteristic that will ever be entered here.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = detail::mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Renders "n/d", or just "n" when the value is an integer.
inline std::string format_rational(const Rat& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Fixed-point decimal rendering with `digits` fractional digits, rounded
// half away from zero. Display only; never used in computation.
inline std::string format_decimal(const Rat& q, unsigned digits) {
    bool negative = q < 0;
    Rat abs_q = negative ? Rat(-q) : q;
    Int scale = int_pow(10, digits);
    Int scaled = rat_floor(abs_q * scale * 2 + 1) / 2;  // round(|q| * scale)
    Int whole = scaled / scale;
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
    if (digits > 0) {
        std::string frac = (scaled % scale).str();
        out += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return out;
}

inline std::optional<Int> parse_integer(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) return std::nullopt;
    Int value = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        value = value * 10 + (s[i] - '0');
    }
    return negative ? Int(-value) : value;
}

// Accepts "n", "n/d" and decimal "n.f" forms, all exact.
inline std::optional<Rat> parse_rational(std::string_view s) {
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = parse_integer(s.substr(0, slash));
        auto den = parse_integer(s.substr(slash + 1));
        if (!num || !den || *den <= 0) return std::nullopt;
        return Rat(*num, *den);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view head = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (frac.empty()) return std::nullopt;
        bool negative = !head.empty() && head[0] == '-';
        auto whole = parse_integer(head.empty() || head == "-" || head == "+"
                                       ? std::string_view("0")
                                       : head);
        auto frac_digits = parse_integer(frac);
        if (!whole || !frac_digits || *frac_digits < 0) return std::nullopt;
        Int scale = int_pow(10, Int(frac.size()));
        Rat magnitude = Rat(boost::multiprecision::abs(*whole)) + Rat(*frac_digits, scale);
        return negative ? Rat(-magnitude) : magnitude;
    }
    auto value = parse_integer(s);
    if (!value) return std::nullopt;
    return Rat(*value);
}

}  // namespace herbrand
