#include "covolume/bernoulli.hpp"

#include <mutex>
#include <string>

#include "covolume/errors.hpp"
#include "covolume/quadfield.hpp"

namespace covol {

BernoulliCache::BernoulliCache()
{
    table_.reserve(default_max_index + 1);
    table_.emplace_back(1);
}

BernoulliCache const & BernoulliCache::shared()
{
    static BernoulliCache instance;
    return instance;
}

std::unique_ptr<BernoulliCache> BernoulliCache::with_override(unsigned k, Rational value)
{
    auto cache = std::make_unique<BernoulliCache>();
    cache->overrides_.emplace(k, std::move(value));
    return cache;
}

// Caller holds the unique lock.
void BernoulliCache::extend_to(unsigned k) const
{
    // sum_{i=0}^{m} C(m+1, i) B_i = 0  =>  B_m = -1/(m+1) sum_{i<m} C(m+1, i) B_i
    for (unsigned m = static_cast<unsigned>(table_.size()); m <= k; ++m) {
        if (m >= 3 && m % 2 == 1) {
            table_.emplace_back(0);
            continue;
        }
        mpq_class acc(0);
        for (unsigned i = 0; i < m; ++i) {
            if (i >= 3 && i % 2 == 1)
                continue;
            acc += mpq_class(binomial(m + 1, i)) * table_[i].raw();
        }
        acc /= -static_cast<long>(m + 1);
        table_.emplace_back(Rational(acc));
    }
}

Rational BernoulliCache::bernoulli(unsigned k) const
{
    if (auto it = overrides_.find(k); it != overrides_.end())
        return it->second;
    {
        std::shared_lock lock(mutex_);
        if (k < table_.size())
            return table_[k];
    }
    std::unique_lock lock(mutex_);
    extend_to(k);
    return table_[k];
}

Rational BernoulliCache::generalized(unsigned k, std::int64_t D) const
{
    if (k == 0)
        throw invalid_input("generalized Bernoulli numbers are indexed from k = 1");
    if (!is_fundamental_discriminant(D))
        throw non_fundamental_discriminant(std::to_string(D) + " is not a fundamental discriminant");
    auto key = std::make_pair(D, k);
    {
        std::shared_lock lock(mutex_);
        if (auto it = generalized_.find(key); it != generalized_.end())
            return it->second;
    }

    // Expanding B_k(a/f) and summing over a gives
    //   B_{k,chi} = sum_{i=0}^{k} C(k,i) B_i f^{i-1} S_{k-i},   S_m = sum_a chi(a) a^m,
    // which keeps the conductor sum in integers.
    std::int64_t const f = D < 0 ? -D : D;
    std::vector<mpz_class> power_sums(k + 1, 0);
    for (std::int64_t a = 1; a <= f; ++a) {
        int chi = kronecker_symbol(D, static_cast<std::uint64_t>(a));
        if (chi == 0)
            continue;
        mpz_class power(1);
        for (unsigned m = 0; m <= k; ++m) {
            if (chi > 0)
                power_sums[m] += power;
            else
                power_sums[m] -= power;
            power *= a;
        }
    }

    mpq_class total(0);
    mpz_class f_power(1); // f^{i}
    for (unsigned i = 0; i <= k; ++i) {
        Rational b = bernoulli(i);
        if (!b.is_zero() && power_sums[k - i] != 0)
            total += mpq_class(binomial(k, i) * f_power * power_sums[k - i]) * b.raw();
        f_power *= f;
    }
    total /= f;
    Rational value(total);

    std::unique_lock lock(mutex_);
    generalized_.emplace(key, value);
    return value;
}

Rational bernoulli_number(unsigned k) { return BernoulliCache::shared().bernoulli(k); }

Rational bernoulli_polynomial_value(unsigned k, Rational const & x, BernoulliCache const & cache)
{
    Rational sum;
    Rational x_power(1); // x^{k-i}, built from i = k downwards
    for (unsigned j = 0; j <= k; ++j) {
        unsigned i = k - j;
        sum += Rational(binomial(k, i)) * cache.bernoulli(i) * x_power;
        x_power *= x;
    }
    return sum;
}

Rational generalized_bernoulli(unsigned k, std::int64_t D, BernoulliCache const & cache)
{
    return cache.generalized(k, D);
}

} // namespace covol
