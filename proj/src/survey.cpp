#include "covolume/survey.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "covolume/errors.hpp"
#include "parallel.hpp"

namespace covol {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool same(RationalInterval const & a, RationalInterval const & b) { return a.lower == b.lower && a.upper == b.upper; }

bool same(NumericInterval const & a, NumericInterval const & b)
{
    return a.lower.value == b.lower.value && a.upper.value == b.upper.value;
}

double relative_difference(double x, double reference) { return std::fabs(x - reference) / std::fabs(reference); }

} // namespace

bool operator==(SurveyRow const & a, SurveyRow const & b)
{
    return a.d == b.d && a.disc == b.disc && a.n == b.n && same(a.nu, b.nu) && same(a.chi, b.chi) &&
           same(a.volume, b.volume) && a.h == b.h && a.h_torsion == b.h_torsion && a.r == b.r &&
           a.epsilon == b.epsilon && a.multiplicity == b.multiplicity && a.exact == b.exact;
}

NumericValue discriminant_bound(int n)
{
    if (n < 2)
        throw invalid_dimension("discriminant_bound: n must be >= 2, got " + std::to_string(n));
    double const s = prasad_exponent_times_four(n) / 4.0;
    int const t = n % 2 == 0 ? 1 : 0;
    double const base = 2 * std::pow(std::numbers::pi, 5) / std::pow(3.0, 5.5);
    double const exponent = (n - t) / (2 * (s - 1));
    double const value = 3 * std::pow(base, exponent);
    return NumericValue{value, 16 * kEps * value};
}

NumericValue brauer_siegel_h_bound(QuadField const & field, int m)
{
    if (m < 2)
        throw invalid_input("brauer_siegel_h_bound: m must be >= 2, got " + std::to_string(m));
    NumericValue const z = zeta_numeric(m);
    NumericValue const l = l_numeric(field, m);
    double const log_prefactor = std::log(static_cast<double>(field.mu_order) * m * (m - 1)) +
                                 log_abs(factorial(static_cast<unsigned>(m - 1))) +
                                 m / 2.0 * std::log(field.disc_abs / (4 * std::numbers::pi * std::numbers::pi));
    double const prefactor = std::exp(log_prefactor);
    double const value = prefactor * z.value * l.value;
    double const err = prefactor * (z.abs_error_bound * l.value + l.abs_error_bound * z.value) + 16 * kEps * value;
    return NumericValue{value, err};
}

MinimalField minimal_field(int n, int safety_margin)
{
    if (n < 2)
        throw invalid_dimension("minimal_field: n must be >= 2, got " + std::to_string(n));
    if (safety_margin < 1)
        throw invalid_input("minimal_field: safety margin must be positive");

    MinimalField out;
    out.n = n;
    out.bound = discriminant_bound(n);
    out.disc_limit = std::max(out.bound.value, 4.0) + safety_margin;

    // Q(sqrt(-3)) and Q(i) always fall below the limit since it is at least 4 + 1.
    auto fields = fields_up_to(static_cast<std::int64_t>(std::floor(out.disc_limit)));
    auto results = detail::parallel_map(fields.size(), [&](std::size_t i) { return compute_covolume(fields[i], n); });

    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].nu.lower < results[best].nu.lower)
            best = i;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i != best && results[i].nu.lower == results[best].nu.lower)
            throw tie_detected("minimal_field: d = " + std::to_string(results[i].field.d) + " and d = " +
                               std::to_string(results[best].field.d) + " share the minimum for n = " +
                               std::to_string(n));
    }

    out.certificate.reserve(results.size());
    for (auto const & r : results)
        out.certificate.push_back(Candidate{r.field, r.nu});
    out.winner = std::move(results[best]);
    return out;
}

NumericInterval growth_closed_form(ClassGroup const & group, int n)
{
    if (n < 2)
        throw invalid_dimension("growth_closed_form: n must be >= 2, got " + std::to_string(n));
    QuadField const & field = group.field();
    double const h_ratio = static_cast<double>(torsion_count(group, static_cast<std::uint64_t>(n) + 1)) /
                           static_cast<double>(torsion_count(group, static_cast<std::uint64_t>(n) + 2));

    // s(n+1) - s(n) is 0 for even n and n + 3/2 for odd n
    double const disc_exponent = (prasad_exponent_times_four(n + 1) - prasad_exponent_times_four(n)) / 4.0;
    NumericValue const f = n % 2 == 0 ? zeta_numeric(n + 2) : l_numeric(field, n + 2);

    double const log_common = std::log((n + 2.0) / (n + 1.0)) + std::log(h_ratio) +
                              disc_exponent * std::log(static_cast<double>(field.disc_abs)) +
                              log_abs(factorial(static_cast<unsigned>(n + 1))) -
                              (n + 2) * std::log(2 * std::numbers::pi) + std::log(f.value);

    // epsilon enters through the odd member of the pair (n, n+1)
    double const eps_min = 2.0;
    double const eps_max = std::ldexp(1.0, static_cast<int>(field.r));
    double const log_lo = n % 2 == 0 ? std::log(eps_min) : -std::log(eps_max);
    double const log_hi = n % 2 == 0 ? std::log(eps_max) : -std::log(eps_min);

    auto endpoint = [&](double log_eps) {
        double const log_value = log_common + log_eps;
        double const v = std::exp(log_value);
        return NumericValue{v, v * (f.abs_error_bound / f.value + 16 * kEps * (std::fabs(log_value) + n))};
    };
    return {endpoint(log_lo), endpoint(log_hi)};
}

GrowthReport growth_ratio(ClassGroup const & group, int n)
{
    if (n < 2)
        throw invalid_dimension("growth_ratio: n must be >= 2, got " + std::to_string(n));
    RationalInterval const here = minimal_covolume(group, n);
    RationalInterval const next = minimal_covolume(group, n + 1);

    GrowthReport report;
    report.n = n;
    report.q = {next.lower / here.upper, next.upper / here.lower};
    report.log_q_over_n = report.q.lower.log_abs() / n;
    report.closed_form = growth_closed_form(group, n);
    report.closed_form_relative_error =
        std::max(relative_difference(report.closed_form.lower.value, report.q.lower.to_double()),
                 relative_difference(report.closed_form.upper.value, report.q.upper.to_double()));
    return report;
}

GrowthReport growth_ratio(QuadField const & field, int n) { return growth_ratio(reduced_forms(field), n); }

OverallMinimum overall_minimum(int n_max, int safety_margin)
{
    if (n_max < 10)
        throw invalid_input("overall_minimum: n_max must be >= 10, got " + std::to_string(n_max));

    OverallMinimum out;
    out.n_max = n_max;
    for (int n = 2; n <= n_max; ++n)
        out.per_dimension.push_back(minimal_field(n, safety_margin));

    std::size_t best_ep = 0;
    std::size_t best_vol = 0;
    for (std::size_t i = 1; i < out.per_dimension.size(); ++i) {
        auto const & w = out.per_dimension[i].winner;
        if (w.nu.lower < out.per_dimension[best_ep].winner.nu.lower)
            best_ep = i;
        double const log_vol = std::log(volume_factor(w.n)) + w.nu.lower.log_abs();
        auto const & bv = out.per_dimension[best_vol].winner;
        if (log_vol < std::log(volume_factor(bv.n)) + bv.nu.lower.log_abs())
            best_vol = i;
    }
    out.minimum = out.per_dimension[best_ep].winner;
    out.n_star = out.minimum.n;
    out.n_star_volume = out.per_dimension[best_vol].winner.n;

    ClassGroup const eisenstein = reduced_forms(from_squarefree_d(3));
    for (int n = 2; n < n_max; ++n)
        out.growth.push_back(growth_ratio(eisenstein, n));
    for (auto it = out.growth.rbegin(); it != out.growth.rend() && it->q.lower > Rational(1); ++it)
        out.monotone_from = it->n;
    return out;
}

mpz_class hwang_p(int n, int l)
{
    return binomial(static_cast<unsigned>(n * l + n + l), static_cast<unsigned>(n));
}

NumericValue hwang_bound(int n, std::uint64_t k)
{
    if (n < 2)
        throw invalid_input("hwang_bound: n must be >= 2, got " + std::to_string(n));
    if (k < 1)
        throw invalid_input("hwang_bound: k must be >= 1");
    mpz_class const gap = hwang_p(n, 4) - hwang_p(n, 2);
    // (4 pi)^n / (n! gap) * (1 - (n+1)/gap) = (4 pi)^n * (gap - n - 1) / (n! gap^2)
    Rational const exact_part(mpz_class(gap - (n + 1)), mpz_class(factorial(static_cast<unsigned>(n)) * gap * gap));
    double const log_value = n * std::log(4 * std::numbers::pi) + exact_part.log_abs();
    double const unit = std::exp(log_value);
    double const value = static_cast<double>(k) * unit;
    return NumericValue{value, value * 16 * kEps * (std::fabs(log_value) + 2)};
}

SurveyRow make_survey_row(CovolumeResult const & result)
{
    SurveyRow row;
    row.d = result.field.d;
    row.disc = result.field.disc_abs;
    row.n = result.n;
    row.nu = result.nu;
    row.chi = result.chi;
    row.volume = result.volume;
    row.h = result.h;
    row.h_torsion = result.h_torsion;
    row.r = result.field.r;
    row.epsilon = result.epsilon.to_string();
    row.multiplicity = result.multiplicity;
    row.exact = result.exact();
    return row;
}

std::vector<SurveyRow> scan(int n, std::int64_t max_disc)
{
    if (n < 2)
        throw invalid_dimension("scan: n must be >= 2, got " + std::to_string(n));
    if (max_disc < 3)
        throw invalid_input("scan: max_disc must be >= 3");
    auto fields = fields_up_to(max_disc);
    return detail::parallel_map(fields.size(),
                                [&](std::size_t i) { return make_survey_row(compute_covolume(fields[i], n)); });
}

} // namespace covol
