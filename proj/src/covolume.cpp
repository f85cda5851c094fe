#include "covolume/covolume.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "covolume/errors.hpp"
#include "parallel.hpp"

namespace covol {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_dimension(int n, char const * what)
{
    if (n < 2)
        throw invalid_dimension(std::string(what) + ": n must be >= 2, got " + std::to_string(n));
}

std::uint64_t h_torsion(ClassGroup const & group, int n)
{
    return torsion_count(group, static_cast<std::uint64_t>(n) + 1);
}

Rational power_of_two(unsigned e) { return Rational(mpz_class(mpz_class(1) << e)); }

// prod_{j=1}^{count} zeta(1-2j) L_l(-2j)
Rational special_value_product(QuadField const & field, int count, BernoulliCache const & cache)
{
    Rational product(1);
    for (int j = 1; j <= count; ++j) {
        auto k = static_cast<unsigned>(2 * j);
        product *= zeta_negative(k, cache) * l_negative(field, k + 1, cache);
    }
    return product;
}

NumericValue scaled(double log_factor, Rational const & x)
{
    double log_value = log_factor + x.log_abs();
    double value = std::exp(log_value);
    return NumericValue{value, value * 8 * kEps * (std::fabs(log_value) + 4)};
}

} // namespace

std::string EpsilonStatus::to_string() const
{
    if (!applicable)
        return "none";
    if (kind == Kind::Exact)
        return std::to_string(min);
    return std::to_string(min) + ".." + std::to_string(max);
}

EpsilonStatus epsilon_status(QuadField const & field, int n)
{
    EpsilonStatus eps;
    if (n % 2 == 0)
        return eps;
    eps.applicable = true;
    eps.min = 2;
    eps.max = std::uint64_t{1} << field.r;
    eps.kind = field.r == 1 ? EpsilonStatus::Kind::Exact : EpsilonStatus::Kind::Bounded;
    return eps;
}

int prasad_exponent_times_four(int n) { return n % 2 == 0 ? n * (n + 3) : (n - 1) * (n + 2); }

double volume_factor(int n)
{
    return std::exp(n * std::log(4 * std::numbers::pi) - log_abs(factorial(static_cast<unsigned>(n + 1))));
}

Rational nu_even(ClassGroup const & group, int n, BernoulliCache const & cache)
{
    if (n < 2 || n % 2 != 0)
        throw invalid_dimension("nu_even: n must be even and >= 2, got " + std::to_string(n));
    Rational prefactor = Rational(static_cast<long>(n + 1)) /
                         (power_of_two(static_cast<unsigned>(n)) * Rational(static_cast<long>(h_torsion(group, n))));
    Rational nu = prefactor * special_value_product(group.field(), n / 2, cache);
    if (nu.sign() <= 0)
        throw std::logic_error("nu_even: non-positive covolume " + nu.to_string());
    return nu;
}

Rational nu_even(QuadField const & field, int n) { return nu_even(reduced_forms(field), n); }

RationalInterval nu_odd(ClassGroup const & group, int n, BernoulliCache const & cache)
{
    if (n < 3 || n % 2 != 1)
        throw invalid_dimension("nu_odd: n must be odd and >= 3, got " + std::to_string(n));
    QuadField const & field = group.field();
    Rational base = Rational(static_cast<long>(n + 1)) /
                    (power_of_two(static_cast<unsigned>(n)) * Rational(static_cast<long>(h_torsion(group, n))));
    if (((n + 1) / 2) % 2 == 1)
        base = -base;
    base *= zeta_negative(static_cast<unsigned>(n + 1), cache);
    base *= special_value_product(field, (n - 1) / 2, cache);

    RationalInterval nu{base * Rational(2), base * power_of_two(field.r)};
    if (nu.lower.sign() <= 0)
        throw std::logic_error("nu_odd: non-positive covolume " + nu.lower.to_string());
    return nu;
}

RationalInterval nu_odd(QuadField const & field, int n) { return nu_odd(reduced_forms(field), n); }

RationalInterval minimal_covolume(ClassGroup const & group, int n, BernoulliCache const & cache)
{
    require_dimension(n, "minimal_covolume");
    if (n % 2 == 0)
        return RationalInterval::point(nu_even(group, n, cache));
    return nu_odd(group, n, cache);
}

RationalInterval euler_characteristic(ClassGroup const & group, int n, BernoulliCache const & cache)
{
    RationalInterval nu = minimal_covolume(group, n, cache);
    if (n % 2 == 0)
        return nu;
    return {-nu.upper, -nu.lower};
}

RationalInterval euler_characteristic(QuadField const & field, int n)
{
    return euler_characteristic(reduced_forms(field), n);
}

NumericInterval hyperbolic_volume(ClassGroup const & group, int n, BernoulliCache const & cache)
{
    RationalInterval nu = minimal_covolume(group, n, cache);
    double const log_factor = std::log(volume_factor(n));
    return {scaled(log_factor, nu.lower), scaled(log_factor, nu.upper)};
}

NumericInterval hyperbolic_volume(QuadField const & field, int n) { return hyperbolic_volume(reduced_forms(field), n); }

RationalInterval index_gamma_lambda(ClassGroup const & group, int n)
{
    require_dimension(n, "index_gamma_lambda");
    Rational full = Rational(static_cast<long>(n + 1)) * Rational(static_cast<long>(h_torsion(group, n)));
    if (n % 2 == 0)
        return RationalInterval::point(full);
    return {full / power_of_two(group.field().r), full / Rational(2)};
}

RationalInterval index_gamma_lambda(QuadField const & field, int n)
{
    return index_gamma_lambda(reduced_forms(field), n);
}

NumericValue prasad_principal_covolume_numeric(QuadField const & field, int n)
{
    require_dimension(n, "prasad_principal_covolume_numeric");
    double const log_two_pi = std::log(2 * std::numbers::pi);
    double log_mu = prasad_exponent_times_four(n) / 4.0 * std::log(static_cast<double>(field.disc_abs));
    for (int j = 1; j <= n; ++j)
        log_mu += log_abs(factorial(static_cast<unsigned>(j))) - (j + 1) * log_two_pi;

    // zeta(2) L(3) zeta(4) ... up to argument n + 1
    double relative_error = 0.0;
    for (int k = 2; k <= n + 1; ++k) {
        NumericValue v = (k % 2 == 0) ? zeta_numeric(k) : l_numeric(field, k);
        log_mu += std::log(v.value);
        relative_error += v.abs_error_bound / v.value;
    }
    double const mu = std::exp(log_mu);
    relative_error += 8 * kEps * (std::fabs(log_mu) + 2 * n + 4);
    return NumericValue{mu, mu * relative_error};
}

NumericInterval ep_normalization(ClassGroup const & group, int n)
{
    NumericValue mu = prasad_principal_covolume_numeric(group.field(), n);
    RationalInterval index = index_gamma_lambda(group, n);
    double const scale = static_cast<double>(n + 1) * static_cast<double>(n + 1);
    auto endpoint = [&](Rational const & idx) {
        double v = scale * mu.value / idx.to_double();
        double err = scale * mu.abs_error_bound / idx.to_double() + 4 * kEps * v;
        return NumericValue{v, err};
    };
    // larger index (epsilon = 2) gives the smaller covolume
    return {endpoint(index.upper), endpoint(index.lower)};
}

NumericInterval ep_normalization(QuadField const & field, int n) { return ep_normalization(reduced_forms(field), n); }

MultiplicityBounds multiplicity_bounds(ClassGroup const & group, int n)
{
    require_dimension(n, "multiplicity_bounds");
    QuadField const & field = group.field();
    std::uint64_t const ht = h_torsion(group, n);
    if (n % 2 == 0) {
        std::uint64_t const two_r = std::uint64_t{1} << field.r;
        return {two_r, two_r * ht};
    }
    if (field.r != 1)
        throw unknown_multiplicity("multiplicity for odd n = " + std::to_string(n) + " and d = " +
                                   std::to_string(field.d) + " (r = " + std::to_string(field.r) +
                                   ") is not determined");
    // n_l lies in [h/2, h] for a divisor h of h_{l,n+1}, or of 2 h_{l,n+1} when 8 | n+1
    bool const eight_divides = (n + 1) % 8 == 0;
    return {1, eight_divides ? 2 * ht : ht};
}

MultiplicityBounds multiplicity_bounds(QuadField const & field, int n)
{
    return multiplicity_bounds(reduced_forms(field), n);
}

CovolumeResult compute_covolume(ClassGroup const & group, int n, BernoulliCache const & cache)
{
    require_dimension(n, "compute_covolume");
    CovolumeResult out;
    out.field = group.field();
    out.n = n;
    out.nu = minimal_covolume(group, n, cache);
    out.chi = n % 2 == 0 ? out.nu : RationalInterval{-out.nu.upper, -out.nu.lower};
    out.index = index_gamma_lambda(group, n);
    double const log_factor = std::log(volume_factor(n));
    out.volume = {scaled(log_factor, out.nu.lower), scaled(log_factor, out.nu.upper)};
    out.h = group.h();
    out.h_torsion = h_torsion(group, n);
    out.epsilon = epsilon_status(group.field(), n);
    if (n % 2 == 0 || group.field().r == 1)
        out.multiplicity = multiplicity_bounds(group, n);
    return out;
}

CovolumeResult compute_covolume(QuadField const & field, int n) { return compute_covolume(reduced_forms(field), n); }

std::vector<CrossPathCheck> cross_path_checks(std::vector<QuadField> const & fields, std::vector<int> const & dims,
                                              double tolerance, BernoulliCache const & cache)
{
    std::vector<ClassGroup> groups;
    groups.reserve(fields.size());
    for (auto const & f : fields)
        groups.push_back(reduced_forms(f));

    std::size_t const total = fields.size() * dims.size();
    return detail::parallel_map(total, [&](std::size_t i) {
        ClassGroup const & group = groups[i / dims.size()];
        int const n = dims[i % dims.size()];
        CrossPathCheck check;
        check.field = group.field();
        check.n = n;
        check.exact = minimal_covolume(group, n, cache).lower;
        check.numeric = ep_normalization(group, n).lower;
        double const exact = check.exact.to_double();
        check.relative_error = std::fabs(check.numeric.value - exact) / exact;
        check.passed = check.relative_error <= tolerance;
        return check;
    });
}

} // namespace covol
