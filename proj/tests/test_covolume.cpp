#include <doctest.h>

#include <cmath>
#include <numbers>

#include "covolume/covolume.hpp"
#include "covolume/errors.hpp"

using covol::QuadField;
using covol::Rational;

namespace {

constexpr double pi = std::numbers::pi;

Rational generalized_by_definition(unsigned k, QuadField const & field)
{
    std::int64_t f = field.disc_abs;
    Rational sum;
    for (std::int64_t a = 1; a <= f; ++a) {
        int chi = covol::kronecker_symbol(field.disc_signed, static_cast<std::uint64_t>(a));
        if (chi != 0)
            sum += Rational(chi) * covol::bernoulli_polynomial_value(k, Rational(a, f));
    }
    return sum * Rational(f).pow(k - 1);
}

std::uint64_t torsion_by_repetition(covol::ClassGroup const & group, std::uint64_t m)
{
    std::uint64_t count = 0;
    for (auto const & g : group.classes()) {
        auto acc = group.principal();
        for (std::uint64_t i = 0; i < m; ++i)
            acc = group.compose(acc, g);
        count += acc == group.principal() ? 1 : 0;
    }
    return count;
}

// nu with epsilon = 2, assembled from the literal special values.
Rational nu_oracle(QuadField const & field, int n)
{
    auto group = covol::reduced_forms(field);
    Rational nu = Rational(n + 1) / (Rational(2).pow(static_cast<unsigned>(n)) *
                                     Rational(static_cast<long>(torsion_by_repetition(group, n + 1))));
    for (int j = 1; 2 * j <= n; ++j) {
        auto k = static_cast<unsigned>(2 * j);
        Rational zeta = -covol::bernoulli_number(k) / Rational(static_cast<long>(k));
        Rational l = -generalized_by_definition(k + 1, field) / Rational(static_cast<long>(k + 1));
        nu *= zeta * l;
    }
    if (n % 2 == 1) {
        Rational zeta = -covol::bernoulli_number(static_cast<unsigned>(n + 1)) / Rational(n + 1);
        nu *= Rational(2) * zeta;
    }
    return nu.abs();
}

} // namespace

TEST_SUITE("covolume")
{
    TEST_CASE("small exact values")
    {
        auto f3 = covol::from_squarefree_d(3);
        auto f1 = covol::from_squarefree_d(1);
        CHECK(covol::nu_even(f3, 2) == Rational(1, 72));
        CHECK(covol::nu_even(f1, 2) == Rational(1, 32));
        auto nu9 = covol::nu_odd(f3, 9);
        CHECK(nu9.is_exact());
        CHECK(nu9.lower == Rational::parse("809/5746705367040"));
        CHECK(covol::euler_characteristic(f3, 9).lower == Rational::parse("-809/5746705367040"));
        CHECK(covol::euler_characteristic(f3, 2).lower == Rational(1, 72));
    }

    TEST_CASE("agrees with the literal formula")
    {
        for (auto const & field : covol::fields_up_to(60))
            for (int n = 2; n <= 12; ++n)
                CHECK_MESSAGE(covol::minimal_covolume(covol::reduced_forms(field), n).lower == nu_oracle(field, n),
                              "d = " << field.d << ", n = " << n);
    }

    TEST_CASE("volumes")
    {
        auto f3 = covol::from_squarefree_d(3);
        auto f1 = covol::from_squarefree_d(1);
        CHECK(covol::hyperbolic_volume(f3, 2).lower.value == doctest::Approx(pi * pi / 27).epsilon(1e-14));
        CHECK(covol::hyperbolic_volume(f1, 2).lower.value == doctest::Approx(pi * pi / 12).epsilon(1e-14));
        double v9 = 809 * std::pow(pi, 9) / 79550340408000.0;
        CHECK(covol::hyperbolic_volume(f3, 9).lower.value == doctest::Approx(v9).epsilon(1e-13));
        CHECK(covol::volume_factor(3) == doctest::Approx(std::pow(4 * pi, 3) / 24).epsilon(1e-14));
    }

    TEST_CASE("index of the principal lattice")
    {
        auto f3 = covol::from_squarefree_d(3);
        auto f23 = covol::from_squarefree_d(23);
        CHECK(covol::index_gamma_lambda(f3, 2).lower == Rational(3));
        CHECK(covol::index_gamma_lambda(f23, 2).lower == Rational(9));
        CHECK(covol::index_gamma_lambda(f23, 4).lower == Rational(5));
        CHECK(covol::index_gamma_lambda(f23, 5).lower == Rational(9));
        auto i5 = covol::index_gamma_lambda(covol::from_squarefree_d(5), 3);
        CHECK(i5.lower == Rational(2));
        CHECK(i5.upper == Rational(4));
    }

    TEST_CASE("epsilon status")
    {
        CHECK(covol::epsilon_status(covol::from_squarefree_d(3), 2).to_string() == "none");
        CHECK(covol::epsilon_status(covol::from_squarefree_d(3), 3).to_string() == "2");
        CHECK(covol::epsilon_status(covol::from_squarefree_d(5), 3).to_string() == "2..4");
        CHECK(covol::epsilon_status(covol::from_squarefree_d(30), 5).to_string() == "2..8");
        CHECK(covol::epsilon_status(covol::from_squarefree_d(1), 3).to_string() == "2");
    }

    TEST_CASE("odd intervals span a factor 2^(r-1)")
    {
        for (auto const & field : covol::fields_up_to(300)) {
            for (int n = 3; n <= 9; n += 2) {
                auto nu = covol::nu_odd(field, n);
                CHECK(nu.upper / nu.lower == Rational(2).pow(field.r - 1));
                CHECK(nu.is_exact() == (field.r == 1));
            }
        }
    }

    TEST_CASE("positivity on the grid")
    {
        for (auto const & field : covol::fields_up_to(200)) {
            auto group = covol::reduced_forms(field);
            for (int n = 2; n <= 40; ++n) {
                auto result = covol::compute_covolume(group, n);
                CHECK(result.nu.lower.sign() > 0);
                CHECK(result.nu.lower <= result.nu.upper);
                CHECK(result.chi.lower <= result.chi.upper);
                CHECK((n % 2 == 0 ? result.chi.lower.sign() > 0 : result.chi.upper.sign() < 0));
                CHECK(result.volume.lower.value > 0);
            }
        }
    }

    TEST_CASE("Q(sqrt(-3)) has the smallest covolume among Disc <= 200")
    {
        auto f3 = covol::reduced_forms(covol::from_squarefree_d(3));
        for (int n = 2; n <= 30; ++n) {
            Rational best = covol::minimal_covolume(f3, n).lower;
            for (auto const & field : covol::fields_up_to(200)) {
                if (field.d == 3)
                    continue;
                CHECK_MESSAGE(covol::minimal_covolume(covol::reduced_forms(field), n).lower > best,
                              "d = " << field.d << ", n = " << n);
            }
        }
    }

    TEST_CASE("exact and numeric routes agree")
    {
        std::vector<int> dims;
        for (int n = 2; n <= 20; ++n)
            dims.push_back(n);
        auto checks = covol::cross_path_checks(covol::fields_up_to(100), dims, 1e-9);
        CHECK(checks.size() == covol::fields_up_to(100).size() * dims.size());
        for (auto const & c : checks)
            CHECK_MESSAGE(c.passed, "d = " << c.field.d << ", n = " << c.n << ", rel = " << c.relative_error);

        // upper endpoints follow the same convention
        auto f30 = covol::reduced_forms(covol::from_squarefree_d(30));
        auto nu = covol::minimal_covolume(f30, 5);
        auto ep = covol::ep_normalization(f30, 5);
        CHECK(ep.upper.value == doctest::Approx(nu.upper.to_double()).epsilon(1e-9));
        CHECK(ep.lower.value == doctest::Approx(nu.lower.to_double()).epsilon(1e-9));
    }

    TEST_CASE("numeric route notices a wrong Bernoulli number")
    {
        auto cache = covol::BernoulliCache::with_override(6, Rational(1, 43));
        auto group = covol::reduced_forms(covol::from_squarefree_d(3));
        auto checks = covol::cross_path_checks({group.field()}, {6, 7}, 1e-9, *cache);
        for (auto const & c : checks)
            CHECK_FALSE(c.passed);
    }

    TEST_CASE("multiplicity bounds")
    {
        auto f3 = covol::from_squarefree_d(3);
        for (int n = 2; n <= 40; ++n) {
            auto m = covol::multiplicity_bounds(f3, n);
            if (n % 2 == 0)
                CHECK(m == covol::MultiplicityBounds{2, 2});
            else if ((n + 1) % 8 == 0)
                CHECK(m == covol::MultiplicityBounds{1, 2});
            else
                CHECK(m == covol::MultiplicityBounds{1, 1});
        }
        for (auto const & field : covol::fields_up_to(300)) {
            auto group = covol::reduced_forms(field);
            auto m = covol::multiplicity_bounds(group, 2);
            CHECK(m.lower == (std::uint64_t{1} << field.r));
            CHECK(m.upper == m.lower * covol::torsion_count(group, 3));
            if (field.r > 1)
                CHECK_THROWS_AS(covol::multiplicity_bounds(group, 3), covol::unknown_multiplicity);
            else
                CHECK(covol::multiplicity_bounds(group, 3).upper == covol::torsion_count(group, 4));
        }
    }

    TEST_CASE("dimension errors")
    {
        auto f3 = covol::from_squarefree_d(3);
        CHECK_THROWS_AS(covol::nu_even(f3, 3), covol::invalid_dimension);
        CHECK_THROWS_AS(covol::nu_odd(f3, 4), covol::invalid_dimension);
        CHECK_THROWS_AS(covol::compute_covolume(f3, 1), covol::invalid_dimension);
        CHECK_THROWS_AS(covol::index_gamma_lambda(f3, 0), covol::invalid_dimension);
    }
}
