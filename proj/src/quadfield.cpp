#include "covolume/quadfield.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <tuple>

#include "covolume/errors.hpp"

namespace covol {

namespace {

using i128 = __int128;

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

// Returns (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b)
{
    std::int64_t old_r = a, r = b;
    std::int64_t old_x = 1, x = 0;
    std::int64_t old_y = 0, y = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
        std::tie(old_x, x) = std::make_tuple(x, old_x - q * x);
        std::tie(old_y, y) = std::make_tuple(y, old_y - q * y);
    }
    if (old_r < 0)
        return {-old_r, -old_x, -old_y};
    return {old_r, old_x, old_y};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t mod_nonneg(i128 a, std::int64_t m)
{
    i128 r = a % m;
    if (r < 0)
        r += m;
    return static_cast<std::int64_t>(r);
}

bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

// (2/m) for odd m, indexed by m mod 8
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

} // namespace

bool is_squarefree(std::int64_t n)
{
    n = abs64(n);
    if (n == 0)
        return false;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return false;
        }
    }
    return true;
}

bool is_fundamental_discriminant(std::int64_t D)
{
    if (D == 0 || D == 1)
        return false;
    std::int64_t r4 = ((D % 4) + 4) % 4;
    if (r4 == 1)
        return is_squarefree(D);
    if (r4 != 0)
        return false;
    std::int64_t m = D / 4;
    std::int64_t m4 = ((m % 4) + 4) % 4;
    return (m4 == 2 || m4 == 3) && is_squarefree(m);
}

std::vector<std::int64_t> prime_divisors(std::int64_t n)
{
    n = abs64(n);
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        primes.push_back(n);
    return primes;
}

QuadField from_squarefree_d(std::int64_t d)
{
    if (d <= 0)
        throw invalid_input("d must be a positive squarefree integer, got " + std::to_string(d));
    if (!is_squarefree(d))
        throw not_squarefree(std::to_string(d) + " is not squarefree");
    QuadField f;
    f.d = d;
    f.disc_abs = (d % 4 == 3) ? d : 4 * d;
    f.disc_signed = -f.disc_abs;
    f.ramified_primes = prime_divisors(f.disc_abs);
    f.r = static_cast<unsigned>(f.ramified_primes.size());
    f.mu_order = d == 3 ? 6 : (d == 1 ? 4 : 2);
    return f;
}

std::vector<QuadField> fields_up_to(std::int64_t max_disc)
{
    std::vector<QuadField> fields;
    for (std::int64_t d = 1; d <= max_disc; ++d) {
        std::int64_t disc = (d % 4 == 3) ? d : 4 * d;
        if (disc <= max_disc && is_squarefree(d))
            fields.push_back(from_squarefree_d(d));
    }
    std::sort(fields.begin(), fields.end(),
              [](QuadField const & x, QuadField const & y) { return x.disc_abs < y.disc_abs; });
    return fields;
}

int kronecker_symbol(std::int64_t D, std::uint64_t m)
{
    if (!is_fundamental_discriminant(D))
        throw non_fundamental_discriminant(std::to_string(D) + " is not a fundamental discriminant");

    std::int64_t a = D;
    auto b = static_cast<std::int64_t>(m);
    if (b == 0)
        return abs64(a) == 1 ? 1 : 0;
    if (a % 2 == 0 && b % 2 == 0)
        return 0;

    int k = 1;
    int v = 0;
    while (b % 2 == 0) {
        ++v;
        b /= 2;
    }
    if (v % 2 == 1)
        k = kTwoTable[a & 7];

    while (true) {
        if (a == 0)
            return b > 1 ? 0 : k;
        v = 0;
        while (a % 2 == 0) {
            ++v;
            a /= 2;
        }
        if (v % 2 == 1)
            k *= kTwoTable[b & 7];
        // quadratic reciprocity; a < 0 counts as 3 mod 4 when a = -1 mod 4
        if (a & b & 2)
            k = -k;
        std::int64_t r = abs64(a);
        a = b % r;
        b = r;
    }
}

bool FormClass::is_reduced() const
{
    if (a <= 0 || abs64(b) > a || a > c)
        return false;
    if ((abs64(b) == a || a == c) && b < 0)
        return false;
    return true;
}

std::ostream & operator<<(std::ostream & os, FormClass const & f)
{
    return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
}

FormClass reduce(FormClass f)
{
    if (f.a <= 0 || f.c <= 0 || f.discriminant() >= 0)
        throw invalid_input("reduce: form is not positive definite");
    while (true) {
        if (f.b <= -f.a || f.b > f.a) {
            std::int64_t k = floor_div(f.a - f.b, 2 * f.a);
            f.c = static_cast<std::int64_t>(static_cast<i128>(f.a) * k * k + static_cast<i128>(f.b) * k + f.c);
            f.b += 2 * f.a * k;
        }
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        break;
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

ClassGroup::ClassGroup(QuadField field, std::vector<FormClass> classes)
    : field_(std::move(field)), classes_(std::move(classes))
{
    std::sort(classes_.begin(), classes_.end());
}

FormClass ClassGroup::principal() const
{
    std::int64_t D = field_.disc_signed;
    std::int64_t b0 = (D % 2 == 0) ? 0 : 1;
    return FormClass{1, b0, (b0 * b0 - D) / 4};
}

bool ClassGroup::contains(FormClass const & g) const
{
    return std::binary_search(classes_.begin(), classes_.end(), g);
}

FormClass ClassGroup::inverse(FormClass const & g) const { return reduce(FormClass{g.a, -g.b, g.c}); }

FormClass ClassGroup::compose(FormClass const & g1, FormClass const & g2) const
{
    if (g1.discriminant() != field_.disc_signed || g2.discriminant() != field_.disc_signed)
        throw discriminant_mismatch("compose: form discriminant differs from " +
                                    std::to_string(field_.disc_signed));

    FormClass f1 = g1, f2 = g2;
    if (f1.a > f2.a)
        std::swap(f1, f2);
    std::int64_t const s = (f1.b + f2.b) / 2;
    std::int64_t const n = f2.b - s;

    std::int64_t y1 = 0, d = f1.a;
    if (f2.a % f1.a != 0) {
        auto [g, u, v] = extended_gcd(f2.a, f1.a);
        (void)v;
        d = g;
        y1 = u;
    }

    std::int64_t x2 = 0, y2 = -1, d1 = d;
    if (s % d != 0) {
        auto [g, x, y] = extended_gcd(s, d);
        d1 = g;
        x2 = x;
        y2 = -y;
    }

    std::int64_t const v1 = f1.a / d1;
    std::int64_t const v2 = f2.a / d1;
    std::int64_t const r =
        mod_nonneg(static_cast<i128>(y1) * y2 * n - static_cast<i128>(x2) * f2.c, v1);
    FormClass out;
    out.a = v1 * v2;
    out.b = f2.b + 2 * v2 * r;
    i128 num = static_cast<i128>(out.b) * out.b - field_.disc_signed;
    out.c = static_cast<std::int64_t>(num / (4 * static_cast<i128>(out.a)));
    return reduce(out);
}

FormClass ClassGroup::power(FormClass const & g, std::uint64_t m) const
{
    FormClass result = principal();
    FormClass base = g;
    while (m > 0) {
        if (m & 1)
            result = compose(result, base);
        m >>= 1;
        if (m > 0)
            base = compose(base, base);
    }
    return result;
}

ClassGroup reduced_forms(QuadField const & field)
{
    std::int64_t const D = field.disc_signed;
    std::vector<FormClass> forms;
    for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t c = num / (4 * a);
            if (c < a || (a == c && b < 0))
                continue;
            if (std::gcd(std::gcd(a, abs64(b)), c) != 1)
                continue;
            forms.push_back(FormClass{a, b, c});
        }
    }
    return ClassGroup(field, std::move(forms));
}

FormClass compose(FormClass const & g1, FormClass const & g2, ClassGroup const & group)
{
    if (!group.contains(g1) || !group.contains(g2))
        throw discriminant_mismatch("compose: operand is not a reduced form of discriminant " +
                                    std::to_string(group.field().disc_signed));
    return group.compose(g1, g2);
}

std::uint64_t torsion_count(ClassGroup const & group, std::uint64_t m)
{
    if (m == 0)
        throw invalid_input("torsion_count: m must be positive");
    FormClass const one = group.principal();
    std::uint64_t count = 0;
    for (auto const & g : group.classes())
        if (group.power(g, m) == one)
            ++count;
    return count;
}

std::vector<FormClass> prime_form_generators(ClassGroup const & group)
{
    std::int64_t const D = group.field().disc_signed;
    std::vector<FormClass> gens;
    for (std::int64_t p = 2; 3 * p * p <= -D; ++p) {
        if (!is_prime(p) || kronecker_symbol(D, static_cast<std::uint64_t>(p)) == -1)
            continue;
        for (std::int64_t b = 0; b < 2 * p; ++b) {
            i128 num = static_cast<i128>(b) * b - D;
            if (num % (4 * p) != 0)
                continue;
            auto c = static_cast<std::int64_t>(num / (4 * p));
            if (std::gcd(std::gcd(p, b), c) != 1)
                continue;
            gens.push_back(reduce(FormClass{p, b, c}));
            break;
        }
    }
    return gens;
}

std::uint64_t closure_order(ClassGroup const & group, std::vector<FormClass> const & generators)
{
    std::set<FormClass> seen{group.principal()};
    std::vector<FormClass> frontier{group.principal()};
    while (!frontier.empty()) {
        std::vector<FormClass> next;
        for (auto const & x : frontier) {
            for (auto const & g : generators) {
                FormClass y = group.compose(x, g);
                if (seen.insert(y).second)
                    next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

} // namespace covol
