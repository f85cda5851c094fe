#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace covol {

/// Invariants of the imaginary quadratic field Q(sqrt(-d)).
struct QuadField {
    std::int64_t d = 0;           ///< squarefree, positive
    std::int64_t disc_abs = 0;    ///< d if d = 3 mod 4, else 4d
    std::int64_t disc_signed = 0; ///< -disc_abs
    std::vector<std::int64_t> ramified_primes;
    unsigned r = 0;        ///< number of ramified primes
    unsigned mu_order = 2; ///< order of the roots of unity

    friend bool operator==(QuadField const &, QuadField const &) = default;
};

bool is_squarefree(std::int64_t n);
bool is_fundamental_discriminant(std::int64_t D);
std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// Throws invalid_input for d <= 0 and not_squarefree for square factors.
QuadField from_squarefree_d(std::int64_t d);

/// All imaginary quadratic fields with disc_abs <= max_disc, ascending by disc_abs.
std::vector<QuadField> fields_up_to(std::int64_t max_disc);

/// Kronecker symbol (D/m) for a fundamental discriminant D.
int kronecker_symbol(std::int64_t D, std::uint64_t m);

/*
 * Primitive positive definite form ax^2 + bxy + cy^2. Group elements are
 * always stored reduced: |b| <= a <= c with b >= 0 when |b| = a or a = c.
 */
struct FormClass {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 1;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;

    friend bool operator==(FormClass const &, FormClass const &) = default;
    friend auto operator<=>(FormClass const &, FormClass const &) = default;
};

std::ostream & operator<<(std::ostream & os, FormClass const & f);

/// Reduced form equivalent to f (f positive definite).
FormClass reduce(FormClass f);

/// The form class group of disc_signed; isomorphic to the ideal class group.
class ClassGroup
{
  public:
    ClassGroup(QuadField field, std::vector<FormClass> classes);

    QuadField const & field() const { return field_; }
    std::vector<FormClass> const & classes() const { return classes_; }
    std::uint64_t h() const { return classes_.size(); }

    FormClass principal() const;
    FormClass inverse(FormClass const & g) const;
    FormClass compose(FormClass const & g1, FormClass const & g2) const;
    FormClass power(FormClass const & g, std::uint64_t m) const;
    bool contains(FormClass const & g) const;

  private:
    QuadField field_;
    std::vector<FormClass> classes_; // sorted
};

/// Enumerates the reduced primitive forms of discriminant field.disc_signed.
ClassGroup reduced_forms(QuadField const & field);

/// Gauss composition followed by reduction.
/// Throws discriminant_mismatch if either form is not in the group.
FormClass compose(FormClass const & g1, FormClass const & g2, ClassGroup const & group);

/// #{g : g^m = 1}; with m = n + 1 this is h_{l,n+1}.
std::uint64_t torsion_count(ClassGroup const & group, std::uint64_t m);

/// Forms of prime norm p <= sqrt(|D|/3), reduced. Their classes generate the group.
std::vector<FormClass> prime_form_generators(ClassGroup const & group);

/// Size of the subgroup generated by `generators` (breadth-first closure).
std::uint64_t closure_order(ClassGroup const & group, std::vector<FormClass> const & generators);

} // namespace covol
