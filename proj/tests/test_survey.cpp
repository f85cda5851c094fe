#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "covolume/errors.hpp"
#include "covolume/survey.hpp"

using covol::Rational;

TEST_SUITE("survey")
{
    TEST_CASE("discriminant bound")
    {
        double const base = 2 * std::pow(std::numbers::pi, 5) / std::pow(3.0, 5.5);
        // n = 10: s = 65/2, t = 1, exponent 9/63
        CHECK(covol::discriminant_bound(10).value == doctest::Approx(3 * std::pow(base, 1.0 / 7)).epsilon(1e-14));
        // n = 9: s = 22, t = 0, exponent 9/42
        CHECK(covol::discriminant_bound(9).value == doctest::Approx(3 * std::pow(base, 9.0 / 42)).epsilon(1e-14));
        for (int n = 4; n <= 200; ++n) {
            CHECK(covol::discriminant_bound(n).value <= 4.0);
            CHECK(covol::discriminant_bound(n).value > 3.0);
        }
        CHECK(covol::discriminant_bound(2000).value == doctest::Approx(3.0).epsilon(1e-3));
        CHECK_THROWS_AS(covol::discriminant_bound(1), covol::invalid_dimension);
    }

    TEST_CASE("Brauer-Siegel bound dominates h")
    {
        for (auto const & field : covol::fields_up_to(500)) {
            auto h = static_cast<double>(covol::reduced_forms(field).h());
            for (int m = 2; m <= 6; ++m)
                CHECK_MESSAGE(covol::brauer_siegel_h_bound(field, m).value >= h, "d = " << field.d << ", m = " << m);
        }
    }

    TEST_CASE("minimal field in small dimensions")
    {
        auto m2 = covol::minimal_field(2);
        CHECK(m2.winner.field.d == 3);
        CHECK(m2.winner.nu.lower == Rational(1, 72));
        auto m3 = covol::minimal_field(3);
        CHECK(m3.winner.field.d == 3);
        CHECK(m3.winner.nu.lower == Rational(1, 6480));
        auto m9 = covol::minimal_field(9);
        CHECK(m9.winner.nu.lower == Rational::parse("809/5746705367040"));
        CHECK_THROWS_AS(covol::minimal_field(1), covol::invalid_dimension);
    }

    TEST_CASE("minimal field certificates are complete and sound")
    {
        for (int n = 2; n <= 30; ++n) {
            auto m = covol::minimal_field(n);
            CHECK(m.winner.field.d == 3);
            CHECK(m.disc_limit >= std::max(m.bound.value, 4.0));
            std::set<std::int64_t> listed;
            for (auto const & c : m.certificate) {
                listed.insert(c.field.disc_abs);
                CHECK(m.winner.nu.lower <= c.nu.lower);
            }
            std::set<std::int64_t> expected;
            for (auto const & f : covol::fields_up_to(static_cast<std::int64_t>(m.disc_limit)))
                expected.insert(f.disc_abs);
            CHECK(listed == expected);
            CHECK(listed.count(3) == 1);
            CHECK(listed.count(4) == 1);
        }
    }

    TEST_CASE("growth ratio")
    {
        auto f3 = covol::from_squarefree_d(3);
        CHECK(covol::growth_ratio(f3, 2).q.lower == Rational(1, 90));
        for (int n = 2; n <= 30; ++n) {
            auto g = covol::growth_ratio(f3, n);
            CHECK(g.q.is_exact());
            CHECK_MESSAGE(g.closed_form_relative_error <= 1e-6, "n = " << n);
        }
        CHECK(covol::growth_ratio(f3, 8).q.lower < Rational(1));
        CHECK(covol::growth_ratio(f3, 9).q.lower > Rational(1));
        for (auto const & field : covol::fields_up_to(100))
            for (int n = 2; n <= 16; ++n)
                CHECK_MESSAGE(covol::growth_ratio(field, n).closed_form_relative_error <= 1e-6,
                              "d = " << field.d << ", n = " << n);
    }

    TEST_CASE("overall minimum")
    {
        auto result = covol::overall_minimum(30);
        CHECK(result.n_star == 9);
        CHECK(result.n_star_volume == 9);
        CHECK(result.minimum.field.d == 3);
        CHECK(result.minimum.chi.lower == Rational::parse("-809/5746705367040"));
        CHECK(result.per_dimension.size() == 29);
        CHECK(result.growth.size() == 28);
        REQUIRE(result.monotone_from.has_value());
        for (auto const & g : result.growth)
            if (g.n >= *result.monotone_from)
                CHECK(g.q.lower > Rational(1));
        CHECK(result.growth[static_cast<std::size_t>(*result.monotone_from - 3)].q.lower <= Rational(1));

        auto wider = covol::overall_minimum(40);
        CHECK(wider.n_star == result.n_star);
        CHECK(wider.n_star_volume == result.n_star_volume);
        CHECK(wider.minimum.nu.lower == result.minimum.nu.lower);
        CHECK(wider.monotone_from == result.monotone_from);
        CHECK_THROWS_AS(covol::overall_minimum(9), covol::invalid_input);
    }

    TEST_CASE("Hwang bound")
    {
        CHECK(covol::hwang_p(2, 4) == 91);
        CHECK(covol::hwang_p(2, 2) == 28);
        double const expected = std::pow(4 * std::numbers::pi, 2) / (2 * 63) * (60.0 / 63);
        CHECK(covol::hwang_bound(2, 1).value == doctest::Approx(expected).epsilon(1e-14));
        CHECK(covol::hwang_bound(2, 1).value == doctest::Approx(1.1936).epsilon(1e-4));
        for (int n = 2; n <= 40; ++n)
            for (std::uint64_t k = 1; k <= 64; k *= 2)
                CHECK(covol::hwang_bound(n, 2 * k).value == 2 * covol::hwang_bound(n, k).value);
        int n2 = 40;
        while (n2 > 2 && covol::hwang_bound(n2 - 1, 1).value > covol::hwang_bound(n2, 1).value)
            --n2;
        CHECK(n2 <= 10);
        CHECK(covol::hwang_bound(40, 1).value < 1e-6 * covol::hwang_bound(n2, 1).value);
        CHECK_THROWS_AS(covol::hwang_bound(1, 1), covol::invalid_input);
        CHECK_THROWS_AS(covol::hwang_bound(2, 0), covol::invalid_input);
    }

    TEST_CASE("scan rows")
    {
        auto rows = covol::scan(2, 1000);
        CHECK(rows.size() == covol::fields_up_to(1000).size());
        bool saw_r3 = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            REQUIRE(rows[i].multiplicity.has_value());
            CHECK(rows[i].multiplicity->lower == (std::uint64_t{1} << rows[i].r));
            saw_r3 = saw_r3 || rows[i].r >= 3;
            if (i > 0)
                CHECK(rows[i - 1].disc < rows[i].disc);
        }
        CHECK(saw_r3);
        auto odd = covol::scan(3, 100);
        for (auto const & row : odd) {
            CHECK(row.exact == (row.r == 1));
            CHECK(row.multiplicity.has_value() == (row.r == 1));
        }
        CHECK_THROWS_AS(covol::scan(1, 100), covol::invalid_dimension);
    }
}
