#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace indpoly {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Dense integer polynomial, coefficients lowest degree first. The zero
// polynomial is canonically the empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class IntPolynomial {
  public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(long v) {
        return IntPolynomial({BigInt(v)});
    }

    static IntPolynomial from_decimal_strings(const std::vector<std::string>& s) {
        std::vector<BigInt> c;
        c.reserve(s.size());
        for (const auto& t : s) c.emplace_back(t, 10);
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& coeff(int k) const {
        static const BigInt zero_{0};
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : zero_;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    std::vector<std::string> to_decimal_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(x.get_str());
        return out;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(c));
    }

    IntPolynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative exponent");
        IntPolynomial r = constant(1);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    IntPolynomial scaled(const BigInt& f) const {
        std::vector<BigInt> c = c_;
        for (auto& x : c) x *= f;
        return IntPolynomial(std::move(c));
    }

    // Multiplies by x^k.
    IntPolynomial shifted(int k) const {
        if (is_zero()) return zero();
        std::vector<BigInt> c(c_.size() + k, BigInt(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return IntPolynomial(std::move(c));
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<BigInt> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            c[i - 1] = c_[i] * static_cast<long>(i);
        return IntPolynomial(std::move(c));
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

// I(H∘Y;x) from I(H;x) and I(Y;x) with n = |V(H)|: the composition
// (I(Y;x))^n · I(H; x / I(Y;x)) with denominators cleared, i.e.
// sum_k h_k x^k iy^{n-k}. Requires iy(0) = 1 and deg(ih) <= n.
inline IntPolynomial corona_compose(const IntPolynomial& ih,
                                    const IntPolynomial& iy, int n) {
    if (n < 0 || ih.degree() > n)
        throw std::invalid_argument("corona_compose: need deg(I_H) <= n");
    if (iy.coeff(0) != 1)
        throw std::invalid_argument(
            "corona_compose: I_Y must have constant term 1");
    // powers[j] = iy^j
    std::vector<IntPolynomial> powers(static_cast<std::size_t>(n) + 1);
    powers[0] = IntPolynomial::constant(1);
    for (int j = 1; j <= n; ++j) powers[j] = powers[j - 1] * iy;
    IntPolynomial acc = IntPolynomial::zero();
    for (int k = 0; k <= ih.degree(); ++k) {
        if (ih.coeff(k) == 0) continue;
        acc = acc + powers[n - k].shifted(k).scaled(ih.coeff(k));
    }
    return acc;
}

// --- coefficient shape ------------------------------------------------------

struct ShapeProfile {
    bool unimodal = true;
    // First and last index attaining the maximum value (mode range).
    int mode_lo = 0;
    int mode_hi = 0;
    // Largest p with s_0 <= ... <= s_p.
    int nondecreasing_prefix_end = 0;
    // Smallest q with s_q >= ... >= s_last.
    int nonincreasing_suffix_start = 0;
    bool log_concave = true;
};

inline ShapeProfile shape_profile(std::span<const BigInt> s) {
    ShapeProfile p;
    int len = static_cast<int>(s.size());
    if (len == 0) return p;

    int pre = 0;
    while (pre + 1 < len && s[pre] <= s[pre + 1]) ++pre;
    int suf = len - 1;
    while (suf > 0 && s[suf - 1] >= s[suf]) --suf;
    p.nondecreasing_prefix_end = pre;
    p.nonincreasing_suffix_start = suf;
    p.unimodal = pre >= suf - 1;

    int arg = 0;
    for (int i = 1; i < len; ++i)
        if (s[i] > s[arg]) arg = i;
    p.mode_lo = arg;
    p.mode_hi = arg;
    for (int i = len - 1; i > arg; --i)
        if (s[i] == s[arg]) {
            p.mode_hi = i;
            break;
        }

    for (int k = 1; k + 1 < len; ++k)
        if (s[k] * s[k] < s[k - 1] * s[k + 1]) {
            p.log_concave = false;
            break;
        }
    return p;
}

inline ShapeProfile shape_profile(const IntPolynomial& p) {
    return shape_profile(std::span<const BigInt>(p.coeffs()));
}

// --- exact real-root census -------------------------------------------------

struct RootCensus {
    int degree = 0;
    int squarefree_degree = 0;
    int distinct_real_roots = 0;
    bool real_rooted = false;  // every root of p is real
};

namespace detail {

using RatPoly = std::vector<BigRational>;  // lowest degree first, trimmed

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divides by the absolute value of the content: scales to a primitive
// integer polynomial while preserving every sign.
inline void rp_make_primitive(RatPoly& p) {
    rp_trim(p);
    if (p.empty()) return;
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& c : p) {
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    BigRational scale(den_lcm, num_gcd);  // positive since gcd, lcm > 0
    scale.canonicalize();
    for (auto& c : p) {
        c *= scale;
        c.canonicalize();
    }
}

// Remainder of a by b (deg b >= 0), exact rational division.
inline RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        BigRational q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        a.pop_back();
        rp_trim(a);
    }
    return a;
}

inline RatPoly rp_from(const IntPolynomial& p) {
    RatPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return out;
}

inline RatPoly rp_derivative(const RatPoly& p) {
    RatPoly out;
    for (std::size_t i = 1; i < p.size(); ++i)
        out.push_back(p[i] * static_cast<long>(i));
    return out;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_make_primitive(a);
    rp_make_primitive(b);
    while (!b.empty()) {
        RatPoly r = rp_rem(std::move(a), b);
        rp_make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline RatPoly rp_div_exact(const RatPoly& a, const RatPoly& b) {
    RatPoly rem = a;
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRational(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        BigRational f = rem.back() / b.back();
        std::size_t off = rem.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) rem[off + i] -= f * b[i];
        rem.pop_back();
        rp_trim(rem);
    }
    return q;
}

inline int rp_sign(const BigRational& x) { return sgn(x); }

}  // namespace detail

// Counts distinct real roots of the square-free part by Sturm's theorem:
// sign variations of the canonical chain at -inf minus at +inf. All
// arithmetic is exact; each chain element is rescaled to a primitive
// integer polynomial (positive scale, signs preserved).
inline RootCensus real_root_census(const IntPolynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("real_root_census: zero polynomial");
    RootCensus out;
    out.degree = p.degree();

    detail::RatPoly rp = detail::rp_from(p);
    detail::RatPoly g = detail::rp_gcd(rp, detail::rp_derivative(rp));
    detail::RatPoly sf = detail::rp_div_exact(rp, g);
    detail::rp_make_primitive(sf);
    out.squarefree_degree = static_cast<int>(sf.size()) - 1;
    if (out.squarefree_degree <= 0) {
        // Nonzero constant: no roots at all, vacuously real-rooted.
        out.distinct_real_roots = 0;
        out.real_rooted = true;
        return out;
    }

    std::vector<detail::RatPoly> chain;
    chain.push_back(sf);
    chain.push_back(detail::rp_derivative(sf));
    detail::rp_make_primitive(chain.back());
    while (!chain.back().empty() && chain.back().size() > 1) {
        detail::RatPoly r =
            detail::rp_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        detail::rp_make_primitive(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }

    auto variations = [&](bool at_minus_inf) {
        int count = 0, prev = 0;
        for (const auto& q : chain) {
            if (q.empty()) continue;
            int s = detail::rp_sign(q.back());
            if (at_minus_inf && (q.size() - 1) % 2 == 1) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++count;
            if (s != 0) prev = s;
        }
        return count;
    };

    out.distinct_real_roots = variations(true) - variations(false);
    out.real_rooted = out.distinct_real_roots == out.squarefree_degree;
    return out;
}

}  // namespace indpoly
