#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "minconn/errors.hpp"

namespace minconn {

// Exact rational arithmetic for edge weights. Stored normalized with a
// positive denominator and gcd(num, den) = 1. Intermediate products go
// through 128-bit integers so desk-scale totals never wrap.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {} // NOLINT: implicit by design
    Rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw InvalidParameters("rational with zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_negative() const { return num_ < 0; }

    Rational operator+(const Rational& other) const {
        __int128 n = static_cast<__int128>(num_) * other.den_ +
                     static_cast<__int128>(other.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * other.den_;
        return from_wide(n, d);
    }
    Rational& operator+=(const Rational& other) { return *this = *this + other; }

    Rational operator-(const Rational& other) const {
        __int128 n = static_cast<__int128>(num_) * other.den_ -
                     static_cast<__int128>(other.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * other.den_;
        return from_wide(n, d);
    }

    bool operator==(const Rational& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }
    std::strong_ordering operator<=>(const Rational& other) const {
        __int128 lhs = static_cast<__int128>(num_) * other.den_;
        __int128 rhs = static_cast<__int128>(other.num_) * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p", "p/q", and plain decimals such as "1.5".
    static Rational parse(const std::string& text) {
        if (text.empty()) throw MalformedInput("empty rational literal");
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            long long p = parse_integer(text.substr(0, slash));
            long long q = parse_integer(text.substr(slash + 1));
            if (q == 0) throw MalformedInput("zero denominator in '" + text + "'");
            return Rational(p, q);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(parse_integer(text));
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18)
            throw MalformedInput("bad decimal literal '" + text + "'");
        bool negative = !whole.empty() && whole[0] == '-';
        long long w = whole.empty() || whole == "-" ? 0 : parse_integer(whole);
        long long scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        long long f = parse_integer(frac);
        if (f < 0) throw MalformedInput("bad decimal literal '" + text + "'");
        long long n = (negative ? -1 : 1) * (std::llabs(w) * scale + f);
        return Rational(n, scale);
    }

private:
    static Rational from_wide(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = wide_gcd(a, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 kMax = INT64_MAX;
        if (n > kMax || n < -kMax || d > kMax)
            throw InvalidParameters("rational overflow");
        return Rational(static_cast<long long>(n), static_cast<long long>(d));
    }

    static __int128 wide_gcd(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    static long long parse_integer(const std::string& text) {
        if (text.empty()) throw MalformedInput("empty integer literal");
        std::size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(text, &pos);
        } catch (const std::exception&) {
            throw MalformedInput("bad integer literal '" + text + "'");
        }
        if (pos != text.size())
            throw MalformedInput("bad integer literal '" + text + "'");
        return value;
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (den_ == 0) throw InvalidParameters("rational with zero denominator");
    }

    long long num_;
    long long den_;
};

} // namespace minconn
