#pragma once

#include <cstdint>

#include "covolume/bernoulli.hpp"
#include "covolume/quadfield.hpp"
#include "covolume/rational.hpp"

namespace covol {

/// A floating-point value with a bound on the truncation error of the
/// series that produced it.
struct NumericValue {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

/// zeta(1-k) = -B_k/k for even k >= 2.
Rational zeta_negative(unsigned k, BernoulliCache const & cache = BernoulliCache::shared());

/// L_l(1-k) = -B_{k,chi}/k for odd k >= 1, chi the character of l/Q.
Rational l_negative(QuadField const & field, unsigned k,
                    BernoulliCache const & cache = BernoulliCache::shared());

/// zeta(s) for integer s >= 2, absolute error below 1e-12.
NumericValue zeta_numeric(int s);

/// L_l(s) = sum chi_D(m) m^-s for integer s >= 2, absolute error below 1e-12.
NumericValue l_numeric(QuadField const & field, int s);

/// zeta(1-k) from zeta(k) through the functional equation, k even >= 2.
double zeta_negative_from_functional_equation(unsigned k);

/// L_l(1-k) from L_l(k) through the functional equation of the odd
/// character with conductor Disc_l, k odd >= 3.
double l_negative_from_functional_equation(QuadField const & field, unsigned k);

} // namespace covol
