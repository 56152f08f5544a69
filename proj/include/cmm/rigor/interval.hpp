#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "cmm/rigor/error.hpp"

namespace cmm {

// Working precision of an interval endpoint, in bits.
class Precision {
public:
    static constexpr unsigned kDefaultBits = 128;
    static constexpr unsigned kMinBits = 53;
    // Ceiling for automatic refinement in verification contexts.
    static constexpr unsigned kRefinementCeiling = 1024;

    constexpr Precision() = default;
    explicit Precision(unsigned bits);

    constexpr unsigned bits() const noexcept { return bits_; }
    Precision doubled() const { return Precision(bits_ * 2); }

    friend constexpr auto operator<=>(Precision, Precision) = default;

private:
    unsigned bits_ = kDefaultBits;
};

inline Precision max(Precision a, Precision b) { return a < b ? b : a; }

namespace detail {

// Owning handle for one mpfr_t. Moves steal the limb pointer.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t bits);
    Mpfr(const Mpfr& other);
    Mpfr(Mpfr&& other) noexcept;
    Mpfr& operator=(const Mpfr& other);
    Mpfr& operator=(Mpfr&& other) noexcept;
    ~Mpfr();

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_prec_t prec() const noexcept { return mpfr_get_prec(value_); }

private:
    mpfr_t value_;
    bool owned_ = true;
};

} // namespace detail

// Exact dyadic rational mantissa * 2^exponent, mantissa rendered in decimal.
struct Dyadic {
    std::string mantissa;
    long exponent = 0;
};

// Closed real interval [lo, hi] with binary floating-point (dyadic)
// endpoints. Every operation rounds the lower endpoint toward -inf and the
// upper endpoint toward +inf, per call; no global rounding state is touched.
class Interval {
public:
    explicit Interval(Precision p = Precision{});

    static Interval point(long value, Precision p = Precision{});
    static Interval point(int value, Precision p = Precision{}) { return point(static_cast<long>(value), p); }
    // Doubles are dyadic, so this is exact whenever p >= 53.
    static Interval point(double value, Precision p = Precision{});
    static Interval rational(const mpq_class& q, Precision p = Precision{});
    static Interval rational(long num, long den, Precision p = Precision{});
    static Interval integer(const mpz_class& z, Precision p = Precision{});
    // Outward-rounded parse of a decimal literal such as "0.57721".
    static Interval decimal(std::string_view text, Precision p = Precision{});
    static Interval hull(const Interval& a, const Interval& b);
    // [a.lo, b.hi]
    static Interval span(const Interval& a, const Interval& b);

    Precision precision() const;
    Interval at(Precision p) const;

    mpfr_srcptr lo() const noexcept { return lo_.get(); }
    mpfr_srcptr hi() const noexcept { return hi_.get(); }
    mpfr_ptr lo_mut() noexcept { return lo_.get(); }
    mpfr_ptr hi_mut() noexcept { return hi_.get(); }

    double lo_down() const;
    double hi_up() const;
    double mid() const;
    // Upper bound on hi - lo.
    double width() const;
    Interval width_enclosure() const;

    bool contains(double v) const;
    bool contains(const mpq_class& q) const;
    bool contains(const Interval& inner) const;
    bool contains_zero() const;
    bool overlaps(const Interval& other) const;
    bool is_positive() const; // lo > 0
    bool is_negative() const; // hi < 0
    bool is_nonnegative() const;

    Interval& operator+=(const Interval& rhs);
    Interval& operator-=(const Interval& rhs);
    Interval& operator*=(const Interval& rhs);
    Interval& operator/=(const Interval& rhs);
    Interval& operator*=(long rhs);
    Interval& operator/=(long rhs);

    // [lo - r, hi + r] for a non-negative radius r (its upper endpoint is used).
    Interval& widen(const Interval& radius);

    Dyadic lo_dyadic() const;
    Dyadic hi_dyadic() const;

    // "mid ± radius" with the requested number of significant digits.
    std::string str(int digits = 17) const;

private:
    detail::Mpfr lo_;
    detail::Mpfr hi_;
};

Interval operator-(const Interval& x);
Interval operator+(Interval a, const Interval& b);
Interval operator-(Interval a, const Interval& b);
Interval operator*(Interval a, const Interval& b);
Interval operator/(Interval a, const Interval& b);
Interval operator+(Interval a, long b);
Interval operator-(Interval a, long b);
Interval operator+(long a, Interval b);
Interval operator-(long a, const Interval& b);
Interval operator*(Interval a, long b);
Interval operator*(long a, Interval b);
Interval operator/(Interval a, long b);
Interval operator/(long a, const Interval& b);

Interval abs(const Interval& x);
Interval sqr(const Interval& x);
Interval sqrt(const Interval& x);
Interval pow(const Interval& x, long n);
// x^y for x > 0 via exp(y log x).
Interval pow(const Interval& x, const Interval& y);
Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval cos(const Interval& x);
Interval sin(const Interval& x);
// Monotone helper used for complex arguments.
Interval atan(const Interval& x);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);

enum class Ordering { CertainlyLess, CertainlyGreater, Indeterminate };

Ordering compare(const Interval& x, const Interval& y);
std::string_view to_string(Ordering o);

enum class Constant { Pi, EulerGamma, Log2, GammaQuarter };

Interval constant(Constant c, Precision p = Precision{});
// Name-based lookup: "pi", "euler_gamma", "log2", "gamma_quarter".
Interval constant(std::string_view name, Precision p = Precision{});

// Convenience.
inline Interval pi(Precision p = Precision{}) { return constant(Constant::Pi, p); }

} // namespace cmm
