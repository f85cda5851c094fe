#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covolume/covolume.hpp"

namespace covol {

/// D_l <= 3 (2 pi^5 / 3^{11/2})^{(n-t)/(2(s-1))}: every field beating
/// Q(sqrt(-3)) in dimension n satisfies this (besides Q(i), handled separately).
NumericValue discriminant_bound(int n);

/// h_l <= mu_l m (m-1) (m-1)! (D_l / 4 pi^2)^{m/2} zeta_l(m), m >= 2.
NumericValue brauer_siegel_h_bound(QuadField const & field, int m);

struct Candidate {
    QuadField field;
    RationalInterval nu;
};

struct MinimalField {
    int n = 0;
    NumericValue bound;     ///< discriminant_bound(n)
    double disc_limit = 0;  ///< max(bound, 4) + safety margin
    CovolumeResult winner;
    std::vector<Candidate> certificate; ///< every field with Disc <= disc_limit, Disc ascending
};

/// Minimizes nu_l(n) over all fields allowed by the discriminant bound;
/// interval candidates are ranked by their lower endpoint.
/// Throws tie_detected when the minimum is not unique.
MinimalField minimal_field(int n, int safety_margin = 20);

/// q_l(n) = nu_l(n+1) / nu_l(n).
struct GrowthReport {
    int n = 0;
    RationalInterval q;
    double log_q_over_n = 0; ///< ln(q.lower) / n
    NumericInterval closed_form;
    double closed_form_relative_error = 0; ///< max over both endpoints
};

GrowthReport growth_ratio(QuadField const & field, int n);
GrowthReport growth_ratio(ClassGroup const & group, int n);

/// Closed form of q_l(n) from the zeta / L values at n + 2.
NumericInterval growth_closed_form(ClassGroup const & group, int n);

struct OverallMinimum {
    int n_max = 0;
    int n_star = 0;        ///< argmin of the minimal |chi| over 2 <= n <= n_max
    int n_star_volume = 0; ///< argmin of the minimal volume
    CovolumeResult minimum;
    std::vector<MinimalField> per_dimension; ///< n = 2 .. n_max
    std::vector<GrowthReport> growth;        ///< Q(sqrt(-3)), n = 2 .. n_max - 1
    /// Smallest n1 with q(n) > 1 for all n1 <= n < n_max; empty if q(n_max - 1) <= 1.
    std::optional<int> monotone_from;
};

/// Throws invalid_input for n_max < 10.
OverallMinimum overall_minimum(int n_max, int safety_margin = 20);

/// Hwang's lower bound for the volume of a smooth complex hyperbolic
/// n-manifold with k cusps.
NumericValue hwang_bound(int n, std::uint64_t k);

/// P(l) = (nl + n + l)! / (n! (nl + l)!).
mpz_class hwang_p(int n, int l);

struct SurveyRow {
    std::int64_t d = 0;
    std::int64_t disc = 0;
    int n = 0;
    RationalInterval nu;
    RationalInterval chi;
    NumericInterval volume;
    std::uint64_t h = 0;
    std::uint64_t h_torsion = 0;
    unsigned r = 0;
    std::string epsilon;
    std::optional<MultiplicityBounds> multiplicity;
    bool exact = true;

    friend bool operator==(SurveyRow const & a, SurveyRow const & b);
};

SurveyRow make_survey_row(CovolumeResult const & result);

/// One row per field with Disc <= max_disc, Disc ascending.
std::vector<SurveyRow> scan(int n, std::int64_t max_disc);

} // namespace covol
