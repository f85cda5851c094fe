#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace covol {

/*
 * Arbitrary-precision signed rational number.
 *
 * Always kept in lowest terms with a positive denominator. Arithmetic is
 * exact; dividing by zero throws covol::division_by_zero instead of
 * trapping inside GMP.
 */
class Rational
{
    mpq_class v_;

  public:
    Rational() = default;
    Rational(long value) : v_(value) {}                    // NOLINT(google-explicit-constructor)
    Rational(int value) : v_(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpz_class const & integer) : v_(integer) {}
    Rational(mpz_class const & num, mpz_class const & den);
    explicit Rational(mpq_class value);

    /// Parses "num/den" or "num" (decimal). Throws invalid_input on bad syntax
    /// or a zero denominator. The result is canonicalized.
    static Rational parse(std::string_view text);

    mpz_class const & numerator() const { return v_.get_num(); }
    mpz_class const & denominator() const { return v_.get_den(); }
    mpq_class const & raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned exponent) const;

    /// Nearest double (GMP truncation, relative error below 2^-52).
    double to_double() const;
    /// Natural log of |x|, valid far outside the double range.
    double log_abs() const;

    /// "num/den", or just "num" when the denominator is 1 and
    /// `always_fraction` is false.
    std::string to_string(bool always_fraction = true) const;

    Rational & operator+=(Rational const & o);
    Rational & operator-=(Rational const & o);
    Rational & operator*=(Rational const & o);
    Rational & operator/=(Rational const & o);

    friend Rational operator+(Rational a, Rational const & b) { return a += b; }
    friend Rational operator-(Rational a, Rational const & b) { return a -= b; }
    friend Rational operator*(Rational a, Rational const & b) { return a *= b; }
    friend Rational operator/(Rational a, Rational const & b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(Rational const & a, Rational const & b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(Rational const & a, Rational const & b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
};

std::ostream & operator<<(std::ostream & os, Rational const & q);

/// ln|z| for a nonzero big integer.
double log_abs(mpz_class const & z);

/// n! as a big integer.
mpz_class factorial(unsigned n);

/// Binomial coefficient C(n, k).
mpz_class binomial(unsigned n, unsigned k);

} // namespace covol
