#include "cmm/special/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace cmm::special {

namespace {

struct BernoulliTable {
    std::shared_mutex mutex;
    std::vector<mpq_class> values{mpq_class(1)};
};

BernoulliTable& table()
{
    static BernoulliTable t;
    return t;
}

} // namespace

mpz_class binomial(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(int n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpq_class bernoulli_number(int n)
{
    if (n < 0) {
        throw std::invalid_argument("bernoulli_number: negative index");
    }
    auto& t = table();
    {
        std::shared_lock lock(t.mutex);
        if (static_cast<std::size_t>(n) < t.values.size()) {
            return t.values[static_cast<std::size_t>(n)];
        }
    }
    std::unique_lock lock(t.mutex);
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    for (int m = static_cast<int>(t.values.size()); m <= n; ++m) {
        if (m >= 3 && m % 2 == 1) {
            t.values.emplace_back(0);
            continue;
        }
        mpq_class s = 0;
        for (int k = 0; k < m; ++k) {
            if (sgn(t.values[static_cast<std::size_t>(k)]) != 0) {
                s += mpq_class(binomial(m + 1, k)) * t.values[static_cast<std::size_t>(k)];
            }
        }
        mpq_class b = -s / mpq_class(m + 1);
        b.canonicalize();
        t.values.push_back(b);
    }
    return t.values[static_cast<std::size_t>(n)];
}

mpq_class bernoulli_polynomial(int n, const mpq_class& x)
{
    mpq_class s = 0;
    mpq_class xp = 1; // x^{n-k}, built from k = n downwards
    for (int k = n; k >= 0; --k) {
        const mpq_class b = bernoulli_number(k);
        if (sgn(b) != 0) {
            s += mpq_class(binomial(n, k)) * b * xp;
        }
        xp *= x;
    }
    s.canonicalize();
    return s;
}

} // namespace cmm::special
