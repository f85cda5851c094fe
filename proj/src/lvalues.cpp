#include "covolume/lvalues.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "covolume/errors.hpp"

namespace covol {

namespace {

constexpr int kBlocks = 16;     // direct summation runs over m <= kBlocks * modulus
constexpr int kCorrections = 8; // Euler-Maclaurin correction terms

struct EulerMaclaurinCoefficients {
    // B_{2j} / (2j)! for j = 1 .. kCorrections + 1
    std::array<double, kCorrections + 2> c{};

    EulerMaclaurinCoefficients()
    {
        for (unsigned j = 1; j <= kCorrections + 1; ++j)
            c[j] = (bernoulli_number(2 * j) / Rational(factorial(2 * j))).to_double();
    }
};

EulerMaclaurinCoefficients const & em_coefficients()
{
    static EulerMaclaurinCoefficients const coeffs;
    return coeffs;
}

// (s)_n = s (s+1) ... (s+n-1)
double rising(double s, int n)
{
    double r = 1.0;
    for (int i = 0; i < n; ++i)
        r *= s + i;
    return r;
}

/*
 * sum_{m >= 1} chi(m) m^-s for a character of the given modulus. Each
 * residue class a is summed directly for m = kf + a, k < kBlocks, and the
 * rest is the Hurwitz tail f^-s zeta(s, kBlocks + a/f), expanded by
 * Euler-Maclaurin in the variable y = kBlocks f + a.
 *
 * For x^-s all derivatives alternate in sign, so the remainder is bounded
 * by the first omitted term; twice that is reported.
 */
template <typename Character>
NumericValue dirichlet_series(int s, std::int64_t modulus, Character chi)
{
    auto const & em = em_coefficients();
    double const f = static_cast<double>(modulus);
    std::int64_t const last = kBlocks * modulus;

    double direct = 0.0;
    for (std::int64_t m = last; m >= 1; --m) {
        int x = chi(m);
        if (x != 0)
            direct += x * std::pow(static_cast<double>(m), -s);
    }

    double tail = 0.0;
    double bound = 0.0;
    for (std::int64_t a = 1; a <= modulus; ++a) {
        int x = chi(a);
        if (x == 0)
            continue;
        double const y = static_cast<double>(last + a);
        double const y_s = std::pow(y, -s);
        double const ratio = f / y;
        double t = std::pow(y, 1 - s) / ((s - 1) * f) + y_s / 2;
        double ratio_pow = ratio;
        for (int j = 1; j <= kCorrections; ++j) {
            t += em.c[j] * rising(s, 2 * j - 1) * y_s * ratio_pow;
            ratio_pow *= ratio * ratio;
        }
        tail += x * t;
        bound += 2.0 * std::fabs(em.c[kCorrections + 1]) * rising(s, 2 * kCorrections + 1) * y_s *
                 ratio_pow;
    }
    return NumericValue{direct + tail, bound};
}

} // namespace

Rational zeta_negative(unsigned k, BernoulliCache const & cache)
{
    if (k < 2 || k % 2 != 0)
        throw invalid_input("zeta_negative: k must be even and >= 2, got " + std::to_string(k));
    return -cache.bernoulli(k) / Rational(static_cast<long>(k));
}

Rational l_negative(QuadField const & field, unsigned k, BernoulliCache const & cache)
{
    if (k < 1 || k % 2 != 1)
        throw invalid_input("l_negative: k must be odd and >= 1, got " + std::to_string(k));
    return -cache.generalized(k, field.disc_signed) / Rational(static_cast<long>(k));
}

NumericValue zeta_numeric(int s)
{
    if (s < 2)
        throw invalid_input("zeta_numeric: s must be >= 2, got " + std::to_string(s));
    return dirichlet_series(s, 1, [](std::int64_t) { return 1; });
}

NumericValue l_numeric(QuadField const & field, int s)
{
    if (s < 2)
        throw invalid_input("l_numeric: s must be >= 2, got " + std::to_string(s));
    std::int64_t const D = field.disc_signed;
    std::vector<signed char> table(static_cast<std::size_t>(field.disc_abs));
    for (std::int64_t a = 0; a < field.disc_abs; ++a)
        table[static_cast<std::size_t>(a)] = static_cast<signed char>(kronecker_symbol(D, static_cast<std::uint64_t>(a)));
    auto chi = [&](std::int64_t m) { return static_cast<int>(table[static_cast<std::size_t>(m % field.disc_abs)]); };
    return dirichlet_series(s, field.disc_abs, chi);
}

double zeta_negative_from_functional_equation(unsigned k)
{
    if (k < 2 || k % 2 != 0)
        throw invalid_input("functional equation: k must be even and >= 2");
    double const two_pi = 2.0 * std::numbers::pi;
    double const sign = (k / 2) % 2 == 0 ? 1.0 : -1.0; // cos(pi k / 2)
    return 2.0 * sign * std::exp(std::lgamma(static_cast<double>(k)) - k * std::log(two_pi)) *
           zeta_numeric(static_cast<int>(k)).value;
}

double l_negative_from_functional_equation(QuadField const & field, unsigned k)
{
    if (k < 3 || k % 2 != 1)
        throw invalid_input("functional equation: k must be odd and >= 3");
    double const two_pi = 2.0 * std::numbers::pi;
    double const f = static_cast<double>(field.disc_abs);
    double const sign = ((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    double const log_mag = std::lgamma(static_cast<double>(k)) + (k - 0.5) * std::log(f) - k * std::log(two_pi);
    return 2.0 * sign * std::exp(log_mag) * l_numeric(field, static_cast<int>(k)).value;
}

} // namespace covol
