#include "rzs/numcore/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

#include "rzs/numcore/errors.hpp"

namespace rzs::numcore {

namespace {

// Grown under the unique lock, read under the shared one. Entries never change
// once appended.
struct BernoulliTable {
    std::shared_mutex mu;
    std::vector<BigRational> values{BigRational(1)};
};

BernoulliTable& bernoulli_table() {
    static BernoulliTable t;
    return t;
}

}  // namespace

BigRational bernoulli(int n) {
    if (n < 0) throw DomainError("bernoulli index must be non-negative");
    if (n >= 3 && n % 2 == 1) return BigRational(0);
    auto& t = bernoulli_table();
    {
        std::shared_lock lock(t.mu);
        if (static_cast<std::size_t>(n) < t.values.size()) return t.values[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(t.mu);
    // sum_{j=0}^{k} C(k+1, j) B_j = 0  =>  B_k = -(1/(k+1)) sum_{j<k} C(k+1, j) B_j
    for (int k = static_cast<int>(t.values.size()); k <= n; ++k) {
        if (k >= 3 && k % 2 == 1) {
            t.values.emplace_back(0);
            continue;
        }
        BigRational acc(0);
        BigInt c(1);  // C(k+1, j), updated incrementally
        for (int j = 0; j < k; ++j) {
            if (!t.values[static_cast<std::size_t>(j)].is_zero())
                acc += BigRational(c) * t.values[static_cast<std::size_t>(j)];
            c = c * (k + 1 - j) / (j + 1);
        }
        t.values.push_back(-acc / BigRational(k + 1));
    }
    return t.values[static_cast<std::size_t>(n)];
}

BigRational bernoulli_polynomial(int n, const BigRational& x) {
    if (n < 0) throw DomainError("bernoulli polynomial degree must be non-negative");
    BigRational acc(0);
    BigRational xp(1);  // x^(n-k), built from k = n downward
    for (int k = n; k >= 0; --k) {
        BigRational b = bernoulli(k);
        if (!b.is_zero()) acc += BigRational(binomial(n, k)) * b * xp;
        xp *= x;
    }
    return acc;
}

BigRational harmonic(int n) {
    if (n < 0) throw DomainError("harmonic index must be non-negative");
    BigRational h(0);
    for (int k = 1; k <= n; ++k) h += BigRational(1, k);
    return h;
}

BigInt factorial(int n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(int n, int k) {
    if (n < 0) throw DomainError("binomial with negative n");
    if (k < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace rzs::numcore
