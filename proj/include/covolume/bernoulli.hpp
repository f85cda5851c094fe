#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "covolume/rational.hpp"

namespace covol {

/*
 * Memoized Bernoulli numbers B_k (convention B_1 = -1/2) and generalized
 * Bernoulli numbers B_{k,chi_D} for quadratic Kronecker characters.
 *
 * The tables grow on demand and are safe to share between threads; every
 * lookup returns the same value it would return on a fresh cache.
 *
 * A cache may carry overrides for individual B_k. Overrides exist only so
 * that test harnesses can check that downstream consistency checks are
 * sensitive to the Bernoulli values; the shared instance never has any.
 */
class BernoulliCache
{
  public:
    static constexpr unsigned default_max_index = 200;

    BernoulliCache();
    BernoulliCache(BernoulliCache const &) = delete;
    BernoulliCache & operator=(BernoulliCache const &) = delete;

    /// Process-wide cache used by the free functions.
    static BernoulliCache const & shared();

    /// Fresh cache whose B_k returns `value` for the given index.
    static std::unique_ptr<BernoulliCache> with_override(unsigned k, Rational value);

    Rational bernoulli(unsigned k) const;

    /// B_{k,chi_D}; D must be a fundamental discriminant.
    Rational generalized(unsigned k, std::int64_t D) const;

  private:
    void extend_to(unsigned k) const;

    mutable std::shared_mutex mutex_;
    mutable std::vector<Rational> table_;
    mutable std::map<std::pair<std::int64_t, unsigned>, Rational> generalized_;
    std::map<unsigned, Rational> overrides_;
};

/// B_k from the shared cache.
Rational bernoulli_number(unsigned k);

/// B_k(x) = sum_{i=0}^{k} C(k,i) B_i x^{k-i}.
Rational bernoulli_polynomial_value(unsigned k, Rational const & x,
                                    BernoulliCache const & cache = BernoulliCache::shared());

/// B_{k,chi_D} = |D|^{k-1} sum_{a=1}^{|D|} chi_D(a) B_k(a/|D|).
/// Throws non_fundamental_discriminant, invalid_input for k = 0.
Rational generalized_bernoulli(unsigned k, std::int64_t D,
                               BernoulliCache const & cache = BernoulliCache::shared());

} // namespace covol
