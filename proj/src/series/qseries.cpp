#include "cmm/series/qseries.hpp"

#include <string>

namespace cmm::series {

QSeries::QSeries(std::size_t order) : coeffs_(order + 1) {}

QSeries::QSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        coeffs_.emplace_back(0);
    }
}

QSeries QSeries::one(std::size_t order)
{
    QSeries s(order);
    s[0] = 1;
    return s;
}

QSeries expand_inverse_pochhammer(const PochhammerFactor& f, std::size_t order)
{
    QSeries s = QSeries::one(order);
    // Multiplying by 1/(1 - e q^m) is c[n] += e c[n - m] in ascending n.
    for (std::size_t m = static_cast<std::size_t>(f.r); m <= order; m += static_cast<std::size_t>(f.t)) {
        for (std::size_t n = m; n <= order; ++n) {
            if (f.sign > 0) {
                s[n] += s[n - m];
            } else {
                s[n] -= s[n - m];
            }
        }
    }
    return s;
}

namespace {

void check_orders(const QSeries& a, const QSeries& b)
{
    if (a.order() != b.order()) {
        throw OrderMismatch("series orders differ: " + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()));
    }
}

void cauchy_term(const QSeries& a, const QSeries& b, std::size_t n, mpz_class& acc)
{
    acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        if (sgn(a[k]) != 0) {
            mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[n - k].get_mpz_t());
        }
    }
}

} // namespace

QSeries series_mul_serial(const QSeries& a, const QSeries& b)
{
    check_orders(a, b);
    QSeries c(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        cauchy_term(a, b, n, c[n]);
    }
    return c;
}

QSeries series_mul(const QSeries& a, const QSeries& b)
{
    check_orders(a, b);
    const auto N = static_cast<long>(a.order());
    QSeries c(a.order());
    // Row n costs O(n); dynamic chunks keep the tail balanced.
#pragma omp parallel for schedule(dynamic, 64)
    for (long n = 0; n <= N; ++n) {
        cauchy_term(a, b, static_cast<std::size_t>(n), c[static_cast<std::size_t>(n)]);
    }
    return c;
}

QSeries expand_G(std::size_t order)
{
    const QSeries odd = expand_inverse_pochhammer({1, 4, +1}, order);
    const QSeries three = expand_inverse_pochhammer({3, 4, -1}, order);
    return series_mul(odd, three);
}

ScanResult scan_nonnegative(const QSeries& s)
{
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (sgn(s[n]) < 0) {
            return {n};
        }
    }
    return {};
}

} // namespace cmm::series
