#pragma once

#include <utility>

#include "cmm/rigor/interval.hpp"

namespace cmm {

// Rectangular complex enclosure re + i*im. Only what the major-arc and
// F-expansion code needs; not a general complex interval type.
struct CInterval {
    Interval re;
    Interval im;

    CInterval() = default;
    CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
    explicit CInterval(Interval r) : re(r), im(Interval::point(0L, r.precision())) {}

    Precision precision() const { return max(re.precision(), im.precision()); }
    bool is_real() const { return mpfr_zero_p(im.lo()) && mpfr_zero_p(im.hi()); }

    CInterval& operator+=(const CInterval& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    CInterval& operator-=(const CInterval& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    CInterval& operator*=(const Interval& s)
    {
        re *= s;
        im *= s;
        return *this;
    }
    CInterval& operator*=(long s)
    {
        re *= s;
        im *= s;
        return *this;
    }
};

inline CInterval operator+(CInterval a, const CInterval& b) { return a += b; }
inline CInterval operator-(CInterval a, const CInterval& b) { return a -= b; }
inline CInterval operator-(const CInterval& a) { return {-a.re, -a.im}; }
inline CInterval operator*(CInterval a, const Interval& s) { return a *= s; }
inline CInterval operator*(const Interval& s, CInterval a) { return a *= s; }
inline CInterval operator*(CInterval a, long s) { return a *= s; }
inline CInterval operator*(long s, CInterval a) { return a *= s; }

inline CInterval operator*(const CInterval& a, const CInterval& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline Interval norm(const CInterval& a) { return sqr(a.re) + sqr(a.im); }
inline Interval abs(const CInterval& a) { return sqrt(norm(a)); }
inline CInterval conj(const CInterval& a) { return {a.re, -a.im}; }

inline CInterval operator/(const CInterval& a, const CInterval& b)
{
    const Interval d = norm(b);
    const CInterval n = a * conj(b);
    return {n.re / d, n.im / d};
}

inline CInterval operator/(CInterval a, const Interval& s)
{
    a.re /= s;
    a.im /= s;
    return a;
}

inline CInterval reciprocal(const CInterval& b)
{
    const Interval d = norm(b);
    return {b.re / d, -b.im / d};
}

inline CInterval exp(const CInterval& z)
{
    const Interval m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

// Principal logarithm; requires Re z > 0 so that arg z = atan(im / re).
inline CInterval log(const CInterval& z)
{
    if (!z.re.is_positive()) {
        throw LogNonPositive("complex log needs a positive real part");
    }
    return {log(norm(z)) / 2L, atan(z.im / z.re)};
}

inline CInterval pow(const CInterval& z, long n)
{
    CInterval r(Interval::point(1L, z.precision()));
    CInterval b = z;
    bool neg = n < 0;
    unsigned long e = neg ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    while (e) {
        if (e & 1UL) {
            r = r * b;
        }
        e >>= 1;
        if (e) {
            b = b * b;
        }
    }
    return neg ? reciprocal(r) : r;
}

} // namespace cmm
