#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace indpoly {

using VertexMask = std::uint64_t;

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

// Mask with the lowest n bits set; n may be 64.
constexpr VertexMask low_mask(int n) {
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

constexpr int popcount(VertexMask m) { return std::popcount(m); }

constexpr int lowest_bit(VertexMask m) { return std::countr_zero(m); }

// Calls f(v) for every set bit, ascending.
template <typename F>
void for_each_bit(VertexMask m, F&& f) {
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        f(v);
    }
}

// Ceiling division for b > 0; a may be negative.
constexpr long long ceil_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && (a > 0) == (b > 0)) ++q;
    return q;
}

// Exact rational with the convention den == 0 meaning positive infinity.
// Big enough for every ratio this library forms (|N(S)|/|S| with values
// in [0, 64], user-supplied lambdas); normalizes to den >= 0, gcd 1.
struct Rational {
    long long num{0};
    long long den{1};

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    static Rational infinity() {
        Rational r;
        r.num = 1;
        r.den = 0;
        return r;
    }

    bool is_infinite() const { return den == 0; }

    void normalize() {
        if (den == 0) {
            num = 1;
            return;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return static_cast<__int128>(a.num) * b.den <
               static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return !(b < a);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return !(a < b);
    }

    std::string str() const {
        if (is_infinite()) return "inf";
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Accepts "p", "p/q", or "inf".
    static Rational parse(const std::string& s) {
        if (s == "inf") return infinity();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            long long p = std::stoll(s.substr(0, slash));
            long long q = std::stoll(s.substr(slash + 1));
            if (q == 0) throw std::invalid_argument("zero denominator");
            return Rational(p, q);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a rational: '" + s + "'");
        }
    }
};

inline Rational min(const Rational& a, const Rational& b) {
    return a < b ? a : b;
}

}  // namespace indpoly
