#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace actres {

/// Exact rational on int64, always normalized with positive denominator.
/// Slack arithmetic stays rational until the final per-arc rounding, so
/// intermediate averages like -535/2 are represented without loss.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Ratio() = default;
    constexpr Ratio(std::int64_t n) : num(n), den(1) {}
    Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0)
            throw std::domain_error("Ratio: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Ratio operator-(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Ratio operator*(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.num, a.den * b.den);
    }
    friend Ratio operator/(const Ratio& a, const Ratio& b) {
        if (b.num == 0)
            throw std::domain_error("Ratio: division by zero");
        return Ratio(a.num * b.den, a.den * b.num);
    }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return a == b || a < b; }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return b <= a; }

    /// Truncation toward zero; never over-tightens a constraint cycle.
    std::int64_t round_toward_zero() const { return num / den; }

    bool is_integer() const { return den == 1; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1)
            return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    /// Parses "2.5", "-100", "8/5" into an exact rational.
    static Ratio parse(const std::string& text) {
        if (text.empty())
            throw std::invalid_argument("Ratio: empty string");
        const auto slash = text.find('/');
        if (slash != std::string::npos) {
            return Ratio(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos)
            return Ratio(std::stoll(text));
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 9 ||
            frac.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("Ratio: bad decimal '" + text + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            den *= 10;
        const bool neg = !whole.empty() && whole[0] == '-';
        const std::int64_t w =
            (whole.empty() || whole == "-" || whole == "+") ? 0 : std::stoll(whole);
        const std::int64_t mag = (w < 0 ? -w : w) * den + std::stoll(frac);
        return Ratio(neg || w < 0 ? -mag : mag, den);
    }
};

/// q = a/b rounded half away from zero (b > 0 required).
inline std::int64_t div_round_half_away(std::int64_t a, std::int64_t b) {
    if (b <= 0)
        throw std::domain_error("div_round_half_away: nonpositive divisor");
    const bool neg = a < 0;
    const __int128 mag = neg ? -static_cast<__int128>(a) : static_cast<__int128>(a);
    const __int128 q = (2 * mag + b) / (2 * static_cast<__int128>(b));
    return static_cast<std::int64_t>(neg ? -q : q);
}

/// v scaled by r, rounded half away from zero.
inline std::int64_t scale_round_half_away(std::int64_t v, const Ratio& r) {
    return div_round_half_away(v * r.num, r.den);
}

} // namespace actres
