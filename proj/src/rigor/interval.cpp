#include "cmm/rigor/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>

namespace cmm {

Precision::Precision(unsigned bits) : bits_(bits)
{
    if (bits < kMinBits) {
        throw InvalidPrecision("precision must be at least 53 bits, got " + std::to_string(bits));
    }
}

namespace detail {

Mpfr::Mpfr(mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& other)
{
    mpfr_init2(value_, other.prec());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept
{
    value_[0] = other.value_[0];
    other.owned_ = false;
}

Mpfr& Mpfr::operator=(const Mpfr& other)
{
    if (this == &other) {
        return *this;
    }
    if (!owned_) {
        mpfr_init2(value_, other.prec());
        owned_ = true;
    } else if (prec() != other.prec()) {
        mpfr_set_prec(value_, other.prec());
    }
    mpfr_set(value_, other.value_, MPFR_RNDN);
    return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept
{
    if (this == &other) {
        return *this;
    }
    if (owned_) {
        mpfr_clear(value_);
    }
    value_[0] = other.value_[0];
    owned_ = true;
    other.owned_ = false;
    return *this;
}

Mpfr::~Mpfr()
{
    if (owned_) {
        mpfr_clear(value_);
    }
}

} // namespace detail

namespace {

using detail::Mpfr;

mpfr_prec_t prec_of(const Interval& x) { return mpfr_get_prec(x.lo()); }

// Raise the working precision of x in place; exact because it only grows.
void promote(Interval& x, mpfr_prec_t bits)
{
    if (prec_of(x) < bits) {
        mpfr_prec_round(x.lo_mut(), bits, MPFR_RNDD);
        mpfr_prec_round(x.hi_mut(), bits, MPFR_RNDU);
    }
}

Interval make(mpfr_prec_t bits)
{
    return Interval(Precision(static_cast<unsigned>(bits)));
}

Dyadic to_dyadic(mpfr_srcptr v)
{
    if (mpfr_zero_p(v)) {
        return {"0", 0};
    }
    if (!mpfr_number_p(v)) {
        if (mpfr_nan_p(v)) {
            return {"nan", 0};
        }
        return {mpfr_sgn(v) > 0 ? "inf" : "-inf", 0};
    }
    mpz_class mant;
    long e = mpfr_get_z_2exp(mant.get_mpz_t(), v);
    const auto tz = mpz_scan1(mant.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_fdiv_q_2exp(mant.get_mpz_t(), mant.get_mpz_t(), tz);
        e += static_cast<long>(tz);
    }
    return {mant.get_str(10), e};
}

using MpfrFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Interval monotone(const Interval& x, MpfrFn fn)
{
    Interval r = make(prec_of(x));
    fn(r.lo_mut(), x.lo(), MPFR_RNDD);
    fn(r.hi_mut(), x.hi(), MPFR_RNDU);
    return r;
}

// cos / sin with extremes located from an enclosure of pi. `phase` is 0 for
// cos (extremes at j*pi) and 1 for sin (extremes at (j + 1/2)*pi).
Interval trig(const Interval& x, MpfrFn fn, int phase)
{
    static constexpr double kReductionLimit = 65536.0;
    if (mpfr_cmp_d(x.hi(), kReductionLimit) > 0 || mpfr_cmp_d(x.lo(), -kReductionLimit) < 0) {
        throw ArgumentReductionFailure("trigonometric argument exceeds 2^16");
    }
    const auto bits = prec_of(x);
    Interval r = make(bits);
    if (x.width() >= 6.5) {
        mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
        mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
        return r;
    }

    Mpfr a(bits);
    Mpfr b(bits);
    fn(a.get(), x.lo(), MPFR_RNDD);
    fn(b.get(), x.hi(), MPFR_RNDD);
    mpfr_min(r.lo_mut(), a.get(), b.get(), MPFR_RNDD);
    fn(a.get(), x.lo(), MPFR_RNDU);
    fn(b.get(), x.hi(), MPFR_RNDU);
    mpfr_max(r.hi_mut(), a.get(), b.get(), MPFR_RNDU);

    // Integers j with (j + phase/2) * pi possibly inside x.
    const Interval p = pi(Precision(static_cast<unsigned>(bits)));
    Interval t_lo = make(bits);
    mpfr_set(t_lo.lo_mut(), x.lo(), MPFR_RNDD);
    mpfr_set(t_lo.hi_mut(), x.lo(), MPFR_RNDU);
    Interval t_hi = make(bits);
    mpfr_set(t_hi.lo_mut(), x.hi(), MPFR_RNDD);
    mpfr_set(t_hi.hi_mut(), x.hi(), MPFR_RNDU);
    t_lo /= p;
    t_hi /= p;
    if (phase == 1) {
        t_lo -= Interval::rational(1, 2, Precision(static_cast<unsigned>(bits)));
        t_hi -= Interval::rational(1, 2, Precision(static_cast<unsigned>(bits)));
    }
    Mpfr jf(bits);
    mpfr_ceil(jf.get(), t_lo.lo());
    const long j_min = mpfr_get_si(jf.get(), MPFR_RNDD);
    mpfr_floor(jf.get(), t_hi.hi());
    const long j_max = mpfr_get_si(jf.get(), MPFR_RNDU);
    for (long j = j_min; j <= j_max; ++j) {
        // cos(j pi) = (-1)^j ; sin((j + 1/2) pi) = (-1)^j
        if (j % 2 == 0) {
            mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
        } else {
            mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
        }
    }
    if (mpfr_cmp_si(r.lo(), -1) < 0) {
        mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
    }
    if (mpfr_cmp_si(r.hi(), 1) > 0) {
        mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
    }
    return r;
}

// 330-digit truncations. The FNV-1a checksums guard against edits of the
// literal text; tests cross-check the values against MPFR's own routines.
constexpr std::string_view kEulerGammaDigits =
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467093694706329174674951"
    "4631447249807082480960504014486542836224173997644923536253500333742937337737673942792595258247094916"
    "0087352039481656708532331517766115286211995015079847937450857057400299213547861466940296043254215190"
    "58775535267331399254012967420";
constexpr std::string_view kGammaQuarterDigits =
    "3.62560990822190831193068515586767200299516768288006546743337799956991924353872912161836013672338430"
    "0361471751392420719965891524094022559977426458890361450606413744896854194999201926773037994630892212"
    "4123183237079920843973699070939056209292323428702741914486039571368350368654879959683684764758514890"
    "90404166340763033971806680595773";

constexpr std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

static_assert(fnv1a(kEulerGammaDigits) == 0x1c69db1a3c093330ULL, "euler_gamma literal corrupted");
static_assert(fnv1a(kGammaQuarterDigits) == 0x88e604a803a5cb5dULL, "gamma_quarter literal corrupted");

Interval literal_constant(std::string_view digits, Precision p)
{
    Interval v = Interval::decimal(digits, p);
    // Truncation error of the literal is below 1e-330.
    v.widen(Interval::decimal("1e-329", p));
    return v;
}

} // namespace

Interval::Interval(Precision p) : lo_(p.bits()), hi_(p.bits()) {}

Interval Interval::point(long value, Precision p)
{
    Interval r(p);
    mpfr_set_si(r.lo_mut(), value, MPFR_RNDD);
    mpfr_set_si(r.hi_mut(), value, MPFR_RNDU);
    return r;
}

Interval Interval::point(double value, Precision p)
{
    Interval r(p);
    mpfr_set_d(r.lo_mut(), value, MPFR_RNDD);
    mpfr_set_d(r.hi_mut(), value, MPFR_RNDU);
    return r;
}

Interval Interval::rational(const mpq_class& q, Precision p)
{
    Interval r(p);
    mpfr_set_q(r.lo_mut(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_mut(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::rational(long num, long den, Precision p)
{
    mpq_class q(num, den);
    q.canonicalize();
    return rational(q, p);
}

Interval Interval::integer(const mpz_class& z, Precision p)
{
    Interval r(p);
    mpfr_set_z(r.lo_mut(), z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_mut(), z.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::decimal(std::string_view text, Precision p)
{
    const std::string s(text);
    Interval r(p);
    if (mpfr_set_str(r.lo_mut(), s.c_str(), 10, MPFR_RNDD) != 0 ||
        mpfr_set_str(r.hi_mut(), s.c_str(), 10, MPFR_RNDU) != 0) {
        throw Error("malformed decimal literal: " + s);
    }
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b)
{
    Interval r = make(std::max(prec_of(a), prec_of(b)));
    mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

Interval Interval::span(const Interval& a, const Interval& b)
{
    Interval r = make(std::max(prec_of(a), prec_of(b)));
    mpfr_set(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_set(r.hi_mut(), b.hi(), MPFR_RNDU);
    if (mpfr_greater_p(r.lo(), r.hi())) {
        throw Error("Interval::span: lower endpoint exceeds upper endpoint");
    }
    return r;
}

Precision Interval::precision() const
{
    return Precision(static_cast<unsigned>(mpfr_get_prec(lo_.get())));
}

Interval Interval::at(Precision p) const
{
    Interval r(p);
    mpfr_set(r.lo_mut(), lo(), MPFR_RNDD);
    mpfr_set(r.hi_mut(), hi(), MPFR_RNDU);
    return r;
}

double Interval::lo_down() const { return mpfr_get_d(lo(), MPFR_RNDD); }
double Interval::hi_up() const { return mpfr_get_d(hi(), MPFR_RNDU); }

double Interval::mid() const
{
    Mpfr m(prec_of(*this) + 1);
    mpfr_add(m.get(), lo(), hi(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return mpfr_get_d(m.get(), MPFR_RNDN);
}

double Interval::width() const
{
    Mpfr w(prec_of(*this));
    mpfr_sub(w.get(), hi(), lo(), MPFR_RNDU);
    return mpfr_get_d(w.get(), MPFR_RNDU);
}

Interval Interval::width_enclosure() const
{
    Interval r = make(prec_of(*this));
    mpfr_sub(r.lo_mut(), hi(), lo(), MPFR_RNDD);
    mpfr_sub(r.hi_mut(), hi(), lo(), MPFR_RNDU);
    return r;
}

bool Interval::contains(double v) const
{
    return mpfr_cmp_d(lo(), v) <= 0 && mpfr_cmp_d(hi(), v) >= 0;
}

bool Interval::contains(const mpq_class& q) const
{
    return mpfr_cmp_q(lo(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi(), q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const
{
    return mpfr_lessequal_p(lo(), inner.lo()) && mpfr_lessequal_p(inner.hi(), hi());
}

bool Interval::contains_zero() const { return mpfr_sgn(lo()) <= 0 && mpfr_sgn(hi()) >= 0; }

bool Interval::overlaps(const Interval& other) const
{
    return mpfr_lessequal_p(lo(), other.hi()) && mpfr_lessequal_p(other.lo(), hi());
}

bool Interval::is_positive() const { return mpfr_sgn(lo()) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi()) < 0; }
bool Interval::is_nonnegative() const { return mpfr_sgn(lo()) >= 0; }

Interval& Interval::operator+=(const Interval& rhs)
{
    promote(*this, prec_of(rhs));
    mpfr_add(lo_mut(), lo(), rhs.lo(), MPFR_RNDD);
    mpfr_add(hi_mut(), hi(), rhs.hi(), MPFR_RNDU);
    return *this;
}

Interval& Interval::operator-=(const Interval& rhs)
{
    if (&rhs == this) {
        const Interval copy = rhs;
        return *this -= copy;
    }
    promote(*this, prec_of(rhs));
    mpfr_sub(lo_mut(), lo(), rhs.hi(), MPFR_RNDD);
    mpfr_sub(hi_mut(), hi(), rhs.lo(), MPFR_RNDU);
    return *this;
}

Interval& Interval::operator*=(const Interval& rhs)
{
    if (&rhs == this) {
        *this = sqr(*this);
        return *this;
    }
    promote(*this, prec_of(rhs));
    const auto bits = prec_of(*this);
    if (mpfr_sgn(lo()) >= 0 && mpfr_sgn(rhs.lo()) >= 0) {
        mpfr_mul(lo_mut(), lo(), rhs.lo(), MPFR_RNDD);
        mpfr_mul(hi_mut(), hi(), rhs.hi(), MPFR_RNDU);
        return *this;
    }
    Mpfr new_lo(bits);
    Mpfr new_hi(bits);
    Mpfr t(bits);
    mpfr_srcptr as[2] = {lo(), hi()};
    mpfr_srcptr bs[2] = {rhs.lo(), rhs.hi()};
    bool first = true;
    for (auto a : as) {
        for (auto b : bs) {
            mpfr_mul(t.get(), a, b, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), new_lo.get())) {
                mpfr_set(new_lo.get(), t.get(), MPFR_RNDD);
            }
            mpfr_mul(t.get(), a, b, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), new_hi.get())) {
                mpfr_set(new_hi.get(), t.get(), MPFR_RNDU);
            }
            first = false;
        }
    }
    mpfr_swap(lo_mut(), new_lo.get());
    mpfr_swap(hi_mut(), new_hi.get());
    return *this;
}

Interval& Interval::operator/=(const Interval& rhs)
{
    if (rhs.contains_zero()) {
        throw DivisionByIntervalContainingZero("division by an interval containing zero");
    }
    if (&rhs == this) {
        const Interval copy = rhs;
        return *this /= copy;
    }
    promote(*this, prec_of(rhs));
    const auto bits = prec_of(*this);
    if (mpfr_sgn(lo()) >= 0 && mpfr_sgn(rhs.lo()) > 0) {
        mpfr_div(lo_mut(), lo(), rhs.hi(), MPFR_RNDD);
        mpfr_div(hi_mut(), hi(), rhs.lo(), MPFR_RNDU);
        return *this;
    }
    Mpfr new_lo(bits);
    Mpfr new_hi(bits);
    Mpfr t(bits);
    mpfr_srcptr as[2] = {lo(), hi()};
    mpfr_srcptr bs[2] = {rhs.lo(), rhs.hi()};
    bool first = true;
    for (auto a : as) {
        for (auto b : bs) {
            mpfr_div(t.get(), a, b, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), new_lo.get())) {
                mpfr_set(new_lo.get(), t.get(), MPFR_RNDD);
            }
            mpfr_div(t.get(), a, b, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), new_hi.get())) {
                mpfr_set(new_hi.get(), t.get(), MPFR_RNDU);
            }
            first = false;
        }
    }
    mpfr_swap(lo_mut(), new_lo.get());
    mpfr_swap(hi_mut(), new_hi.get());
    return *this;
}

Interval& Interval::operator*=(long rhs)
{
    if (rhs >= 0) {
        mpfr_mul_si(lo_mut(), lo(), rhs, MPFR_RNDD);
        mpfr_mul_si(hi_mut(), hi(), rhs, MPFR_RNDU);
    } else {
        mpfr_swap(lo_mut(), hi_mut());
        mpfr_mul_si(lo_mut(), lo(), rhs, MPFR_RNDD);
        mpfr_mul_si(hi_mut(), hi(), rhs, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator/=(long rhs)
{
    if (rhs == 0) {
        throw DivisionByIntervalContainingZero("division by zero");
    }
    if (rhs < 0) {
        mpfr_swap(lo_mut(), hi_mut());
    }
    mpfr_div_si(lo_mut(), lo(), rhs, MPFR_RNDD);
    mpfr_div_si(hi_mut(), hi(), rhs, MPFR_RNDU);
    return *this;
}

Interval& Interval::widen(const Interval& radius)
{
    promote(*this, prec_of(radius));
    mpfr_sub(lo_mut(), lo(), radius.hi(), MPFR_RNDD);
    mpfr_add(hi_mut(), hi(), radius.hi(), MPFR_RNDU);
    return *this;
}

Dyadic Interval::lo_dyadic() const { return to_dyadic(lo()); }
Dyadic Interval::hi_dyadic() const { return to_dyadic(hi()); }

std::string Interval::str(int digits) const
{
    const auto bits = prec_of(*this) + 2;
    Mpfr m(bits);
    Mpfr r(bits);
    Mpfr t(bits);
    mpfr_add(m.get(), lo(), hi(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    mpfr_sub(r.get(), m.get(), lo(), MPFR_RNDU);
    mpfr_sub(t.get(), hi(), m.get(), MPFR_RNDU);
    mpfr_max(r.get(), r.get(), t.get(), MPFR_RNDU);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg ± %.2RUe", digits, m.get(), r.get());
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

Interval operator-(const Interval& x)
{
    Interval r = make(prec_of(x));
    mpfr_neg(r.lo_mut(), x.hi(), MPFR_RNDD);
    mpfr_neg(r.hi_mut(), x.lo(), MPFR_RNDU);
    return r;
}

Interval operator+(Interval a, const Interval& b) { return a += b; }
Interval operator-(Interval a, const Interval& b) { return a -= b; }
Interval operator*(Interval a, const Interval& b) { return a *= b; }
Interval operator/(Interval a, const Interval& b) { return a /= b; }

Interval operator+(Interval a, long b)
{
    mpfr_add_si(a.lo_mut(), a.lo(), b, MPFR_RNDD);
    mpfr_add_si(a.hi_mut(), a.hi(), b, MPFR_RNDU);
    return a;
}

Interval operator-(Interval a, long b)
{
    mpfr_sub_si(a.lo_mut(), a.lo(), b, MPFR_RNDD);
    mpfr_sub_si(a.hi_mut(), a.hi(), b, MPFR_RNDU);
    return a;
}

Interval operator+(long a, Interval b) { return std::move(b) + a; }
Interval operator-(long a, const Interval& b) { return -b + a; }
Interval operator*(Interval a, long b) { return a *= b; }
Interval operator*(long a, Interval b) { return b *= a; }
Interval operator/(Interval a, long b) { return a /= b; }

Interval operator/(long a, const Interval& b)
{
    return Interval::point(a, b.precision()) / b;
}

Interval abs(const Interval& x)
{
    if (mpfr_sgn(x.lo()) >= 0) {
        return x;
    }
    if (mpfr_sgn(x.hi()) <= 0) {
        return -x;
    }
    Interval r = make(prec_of(x));
    mpfr_set_zero(r.lo_mut(), 1);
    mpfr_neg(r.hi_mut(), x.lo(), MPFR_RNDU);
    mpfr_max(r.hi_mut(), r.hi(), x.hi(), MPFR_RNDU);
    return r;
}

Interval sqr(const Interval& x)
{
    const Interval a = abs(x);
    Interval r = make(prec_of(x));
    mpfr_sqr(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_sqr(r.hi_mut(), a.hi(), MPFR_RNDU);
    return r;
}

Interval sqrt(const Interval& x)
{
    if (mpfr_sgn(x.lo()) < 0) {
        throw NegativeSqrt("square root of an interval with negative lower endpoint");
    }
    return monotone(x, mpfr_sqrt);
}

Interval pow(const Interval& x, long n)
{
    if (n == 0) {
        return Interval::point(1L, x.precision());
    }
    if (n < 0) {
        return 1L / pow(x, -n);
    }
    const auto un = static_cast<unsigned long>(n);
    const Interval base = (n % 2 == 0) ? abs(x) : x;
    Interval r = make(prec_of(x));
    mpfr_pow_ui(r.lo_mut(), base.lo(), un, MPFR_RNDD);
    mpfr_pow_ui(r.hi_mut(), base.hi(), un, MPFR_RNDU);
    return r;
}

Interval pow(const Interval& x, const Interval& y)
{
    return exp(y * log(x));
}

Interval exp(const Interval& x) { return monotone(x, mpfr_exp); }

Interval log(const Interval& x)
{
    if (mpfr_sgn(x.lo()) <= 0) {
        throw LogNonPositive("logarithm of an interval with non-positive lower endpoint");
    }
    return monotone(x, mpfr_log);
}

Interval cos(const Interval& x) { return trig(x, mpfr_cos, 0); }
Interval sin(const Interval& x) { return trig(x, mpfr_sin, 1); }
Interval atan(const Interval& x) { return monotone(x, mpfr_atan); }

Interval min(const Interval& a, const Interval& b)
{
    Interval r = make(std::max(prec_of(a), prec_of(b)));
    mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_min(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

Interval max(const Interval& a, const Interval& b)
{
    Interval r = make(std::max(prec_of(a), prec_of(b)));
    mpfr_max(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

Ordering compare(const Interval& x, const Interval& y)
{
    if (mpfr_less_p(x.hi(), y.lo())) {
        return Ordering::CertainlyLess;
    }
    if (mpfr_greater_p(x.lo(), y.hi())) {
        return Ordering::CertainlyGreater;
    }
    return Ordering::Indeterminate;
}

std::string_view to_string(Ordering o)
{
    switch (o) {
    case Ordering::CertainlyLess:
        return "CertainlyLess";
    case Ordering::CertainlyGreater:
        return "CertainlyGreater";
    case Ordering::Indeterminate:
        break;
    }
    return "Indeterminate";
}

Interval constant(Constant c, Precision p)
{
    thread_local std::map<std::pair<int, unsigned>, Interval> cache;
    const auto key = std::make_pair(static_cast<int>(c), p.bits());
    if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }
    Interval v(p);
    switch (c) {
    case Constant::Pi:
        mpfr_const_pi(v.lo_mut(), MPFR_RNDD);
        mpfr_const_pi(v.hi_mut(), MPFR_RNDU);
        break;
    case Constant::Log2:
        mpfr_const_log2(v.lo_mut(), MPFR_RNDD);
        mpfr_const_log2(v.hi_mut(), MPFR_RNDU);
        break;
    case Constant::EulerGamma:
        v = literal_constant(kEulerGammaDigits, p);
        break;
    case Constant::GammaQuarter:
        v = literal_constant(kGammaQuarterDigits, p);
        break;
    }
    cache.emplace(key, v);
    return v;
}

Interval constant(std::string_view name, Precision p)
{
    if (name == "pi") {
        return constant(Constant::Pi, p);
    }
    if (name == "euler_gamma") {
        return constant(Constant::EulerGamma, p);
    }
    if (name == "log2") {
        return constant(Constant::Log2, p);
    }
    if (name == "gamma_quarter") {
        return constant(Constant::GammaQuarter, p);
    }
    throw UnknownConstant("unknown constant: " + std::string(name));
}

} // namespace cmm
