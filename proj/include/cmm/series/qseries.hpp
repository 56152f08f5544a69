#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cmm/rigor/error.hpp"

namespace cmm::series {

// Truncated power series sum_{n=0}^{order} c_n q^n with exact integer
// coefficients.
class QSeries {
public:
    explicit QSeries(std::size_t order = 0);
    explicit QSeries(std::vector<mpz_class> coeffs);

    static QSeries one(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const mpz_class& operator[](std::size_t n) const { return coeffs_[n]; }
    mpz_class& operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<mpz_class> coeffs_;
};

// prod_{k>=0} (1 - sign q^{t k + r})^{-1}
struct PochhammerFactor {
    int r = 1;
    int t = 1;
    int sign = 1;
};

QSeries expand_inverse_pochhammer(const PochhammerFactor& f, std::size_t order);

// Truncated Cauchy product. The parallel kernel splits output indices across
// OpenMP threads; the serial one is the reference used by tests and the bench.
QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_mul_serial(const QSeries& a, const QSeries& b);

// G(q) = 1 / (q, -q^3; q^4)_inf
QSeries expand_G(std::size_t order);

struct ScanResult {
    std::optional<std::size_t> first_negative;
    bool all_nonnegative() const { return !first_negative.has_value(); }
};

ScanResult scan_nonnegative(const QSeries& s);

} // namespace cmm::series
