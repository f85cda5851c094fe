#include "covolume/rational.hpp"

#include <cmath>
#include <ostream>

#include "covolume/errors.hpp"

namespace covol {

namespace {

bool is_decimal_integer(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!is_decimal_integer(s))
        throw invalid_input("not a decimal integer: '" + std::string(s) + "'");
    if (s[0] == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw division_by_zero();
    v_ = mpq_class(num, 1);
    v_ /= den;
    v_.canonicalize();
}

Rational::Rational(mpz_class const & num, mpz_class const & den)
{
    if (den == 0)
        throw division_by_zero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value))
{
    if (v_.get_den() == 0)
        throw division_by_zero();
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!den.empty() && (den[0] == '-' || den[0] == '+'))
        throw invalid_input("denominator must be unsigned: '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0)
        throw invalid_input("zero denominator: '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

Rational Rational::abs() const
{
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw division_by_zero();
    Rational r;
    r.v_ = 1 / v_;
    r.v_.canonicalize();
    return r;
}

Rational Rational::pow(unsigned exponent) const
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), exponent);
    return Rational(num, den);
}

double Rational::to_double() const { return v_.get_d(); }

double Rational::log_abs() const
{
    if (is_zero())
        throw invalid_input("log of zero");
    return covol::log_abs(v_.get_num()) - covol::log_abs(v_.get_den());
}

std::string Rational::to_string(bool always_fraction) const
{
    std::string s = v_.get_num().get_str();
    if (always_fraction || v_.get_den() != 1)
        s += "/" + v_.get_den().get_str();
    return s;
}

Rational & Rational::operator+=(Rational const & o)
{
    v_ += o.v_;
    return *this;
}

Rational & Rational::operator-=(Rational const & o)
{
    v_ -= o.v_;
    return *this;
}

Rational & Rational::operator*=(Rational const & o)
{
    v_ *= o.v_;
    return *this;
}

Rational & Rational::operator/=(Rational const & o)
{
    if (o.is_zero())
        throw division_by_zero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.v_ = -v_;
    return r;
}

std::ostream & operator<<(std::ostream & os, Rational const & q) { return os << q.to_string(false); }

double log_abs(mpz_class const & z)
{
    if (z == 0)
        throw invalid_input("log of zero");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

mpz_class factorial(unsigned n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned n, unsigned k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace covol
