#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covolume/bernoulli.hpp"
#include "covolume/lvalues.hpp"
#include "covolume/quadfield.hpp"
#include "covolume/rational.hpp"

namespace covol {

/// Closed rational interval; lower == upper for exactly known values.
struct RationalInterval {
    Rational lower;
    Rational upper;

    static RationalInterval point(Rational const & x) { return {x, x}; }
    bool is_exact() const { return lower == upper; }
};

struct NumericInterval {
    NumericValue lower;
    NumericValue upper;

    static NumericInterval point(NumericValue const & x) { return {x, x}; }
    bool is_exact() const { return lower.value == upper.value; }
};

/*
 * The factor epsilon_l(n) of the odd-dimensional formula. It is 2 when a
 * single prime ramifies; otherwise it is only known to be a divisor of
 * 2^r that is at least 2. Even n has no such factor (applicable = false).
 */
struct EpsilonStatus {
    enum class Kind { Exact, Bounded };

    Kind kind = Kind::Exact;
    bool applicable = false;
    std::uint64_t min = 1;
    std::uint64_t max = 1;

    /// "none", "2", or "2..2^r" written out, e.g. "2..8".
    std::string to_string() const;
};

struct MultiplicityBounds {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;

    friend bool operator==(MultiplicityBounds const &, MultiplicityBounds const &) = default;
};

struct CovolumeResult {
    QuadField field;
    int n = 0;
    RationalInterval nu;    ///< minimal |chi|
    RationalInterval chi;   ///< (-1)^n nu, endpoints ordered
    RationalInterval index; ///< [Gamma_l : Lambda_l]
    NumericInterval volume; ///< complex hyperbolic volume, curvature -1
    std::uint64_t h = 0;
    std::uint64_t h_torsion = 0; ///< h_{l,n+1}
    EpsilonStatus epsilon;
    std::optional<MultiplicityBounds> multiplicity;

    bool exact() const { return epsilon.kind == EpsilonStatus::Kind::Exact; }
};

EpsilonStatus epsilon_status(QuadField const & field, int n);

/// 4s, where s = n(n+3)/4 (n even) or (n-1)(n+2)/4 (n odd).
int prasad_exponent_times_four(int n);

/// (4 pi)^n / (n+1)!, the factor converting |chi| into volume.
double volume_factor(int n);

/// nu_l(n) for even n >= 2. Throws invalid_dimension otherwise.
Rational nu_even(ClassGroup const & group, int n, BernoulliCache const & cache = BernoulliCache::shared());
Rational nu_even(QuadField const & field, int n);

/// nu_l(n) for odd n >= 3; an interval over the admissible epsilon unless r = 1.
RationalInterval nu_odd(ClassGroup const & group, int n, BernoulliCache const & cache = BernoulliCache::shared());
RationalInterval nu_odd(QuadField const & field, int n);

/// nu_l(n) for any n >= 2.
RationalInterval minimal_covolume(ClassGroup const & group, int n,
                                  BernoulliCache const & cache = BernoulliCache::shared());

RationalInterval euler_characteristic(ClassGroup const & group, int n,
                                      BernoulliCache const & cache = BernoulliCache::shared());
RationalInterval euler_characteristic(QuadField const & field, int n);

NumericInterval hyperbolic_volume(ClassGroup const & group, int n,
                                  BernoulliCache const & cache = BernoulliCache::shared());
NumericInterval hyperbolic_volume(QuadField const & field, int n);

RationalInterval index_gamma_lambda(ClassGroup const & group, int n);
RationalInterval index_gamma_lambda(QuadField const & field, int n);

/// mu(SU(n,1)/Lambda_l) from zeta and L at positive integers.
NumericValue prasad_principal_covolume_numeric(QuadField const & field, int n);

/// nu_l(n) obtained numerically: (n+1)^2 mu(Lambda_l) / [Gamma_l : Lambda_l].
/// lower/upper follow the same epsilon convention as nu_odd.
NumericInterval ep_normalization(ClassGroup const & group, int n);
NumericInterval ep_normalization(QuadField const & field, int n);

/// Bounds on the number of isomorphism classes realizing nu_l(n).
/// Throws unknown_multiplicity for odd n with r > 1.
MultiplicityBounds multiplicity_bounds(ClassGroup const & group, int n);
MultiplicityBounds multiplicity_bounds(QuadField const & field, int n);

CovolumeResult compute_covolume(ClassGroup const & group, int n,
                                BernoulliCache const & cache = BernoulliCache::shared());
CovolumeResult compute_covolume(QuadField const & field, int n);

/// One comparison of the exact and numeric routes to nu_l(n).
struct CrossPathCheck {
    QuadField field;
    int n = 0;
    Rational exact;           ///< lower endpoint of nu (epsilon = 2)
    NumericValue numeric;     ///< matching endpoint of ep_normalization
    double relative_error = 0.0;
    bool passed = false;
};

/// Compares both routes for every (field, n) pair, in input order.
std::vector<CrossPathCheck> cross_path_checks(std::vector<QuadField> const & fields, std::vector<int> const & dims,
                                              double tolerance,
                                              BernoulliCache const & cache = BernoulliCache::shared());

} // namespace covol
