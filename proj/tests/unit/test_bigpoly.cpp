#include <random>

#include <doctest.h>

#include "cubicf/bigpoly.hpp"
#include "cubicf/errors.hpp"
#include "../support/bridge.hpp"

using namespace cubicf;

namespace {

IntPolynomial random_poly(std::mt19937_64 & rng, int deg, long bound)
{
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<Integer> c;
    for (int i = 0; i <= deg; ++i)
        c.emplace_back(coef(rng));
    while (c.back() == 0)
        c.back() = coef(rng);
    return IntPolynomial(std::move(c));
}

Unimodular2x2 random_unimodular(std::mt19937_64 & rng, int steps)
{
    std::uniform_int_distribution<long> a(-4, 4);
    Unimodular2x2 g;
    for (int i = 0; i < steps; ++i)
        g = g * Unimodular2x2::step(Integer(a(rng)));
    return g;
}

/* b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd for a x^3 + b x^2 + c x + d */
Integer cubic_disc_formula(IntPolynomial const & f)
{
    Integer const a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
    return Integer(b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d +
                   18 * a * b * c * d);
}

} // namespace

TEST_CASE("eval_at_rational")
{
    IntPolynomial const f{-2, 0, 0, 1};
    CHECK(eval_at_rational(f, Rational(4, 3)) == Rational(10, 27));
    CHECK(eval_at_rational(f, Rational(0)) == -2);
    CHECK(eval_at_rational(IntPolynomial{-1, -2, 1, 1}, Rational(1)) == -1);
    CHECK(eval_homogeneous(f, 4, 3) == 10);
    CHECK(sign_at_rational(f, Rational(5, 4)) == -1);
}

TEST_CASE("content_primitive")
{
    auto [c1, g1] = content_primitive(IntPolynomial{-4, 0, 2});
    CHECK(c1 == 2);
    CHECK(g1 == IntPolynomial{-2, 0, 1});
    auto [c2, g2] = content_primitive(IntPolynomial{1, 3, 3, -1});
    CHECK(c2 == 1);
    CHECK(g2 == IntPolynomial{-1, -3, -3, 1});
    auto [c3, g3] = content_primitive(IntPolynomial{-2, 0, 0, 1});
    CHECK(c3 == 1);
    CHECK(g3 == IntPolynomial{-2, 0, 0, 1});
    CHECK_THROWS_AS(content_primitive(IntPolynomial{}), DomainError);
}

TEST_CASE("content_primitive output is primitive with positive leading coefficient")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> k(-30, 30);
    for (int i = 0; i < 200; ++i) {
        IntPolynomial f = random_poly(rng, 1 + i % 5, 50);
        long s = k(rng);
        if (s == 0)
            s = 7;
        f = Integer(s) * f;
        auto const [c, g] = content_primitive(f);
        CHECK(c > 0);
        CHECK(g.content() == 1);
        CHECK(g.leading() > 0);
        CHECK((c * g == f || c * g == -f));
    }
}

TEST_CASE("discriminant")
{
    CHECK(discriminant(IntPolynomial{-1, -2, 1, 1}) == 49);
    CHECK(discriminant(IntPolynomial{-2, 0, 0, 1}) == -108);
    CHECK(discriminant(IntPolynomial{-1, -1, 1}) == 5);
    CHECK(discriminant(IntPolynomial{49, 0, -7, 1}) == cubic_disc_formula(IntPolynomial{49, 0, -7, 1}));
    CHECK_THROWS_AS(discriminant(IntPolynomial{3, 1}), DomainError);
    /* x^4 + 1 has discriminant 256 */
    CHECK(discriminant(IntPolynomial{1, 0, 0, 0, 1}) == 256);
}

TEST_CASE("discriminant matches the closed cubic formula")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        IntPolynomial const f = random_poly(rng, 3, 1000);
        CHECK(discriminant(f) == cubic_disc_formula(f));
    }
}

TEST_CASE("resultant")
{
    CHECK(resultant(IntPolynomial{-2, 0, 1}, IntPolynomial{-3, 0, 1}) == 1);
    CHECK(resultant(IntPolynomial{-1, 1}, IntPolynomial{-1, 0, 1}) == 0);
    /* res(x - r, g) = g(r) */
    CHECK(resultant(IntPolynomial{-5, 1}, IntPolynomial{1, 2, 3}) == 86);
}

TEST_CASE("gcd and squarefree part")
{
    IntPolynomial const a{-1, 0, 1};
    IntPolynomial const b{1, 2, 1};
    CHECK(gcd(a, b) == IntPolynomial{1, 1});
    CHECK(is_squarefree(IntPolynomial{-2, 0, 0, 1}));
    CHECK_FALSE(is_squarefree(b * IntPolynomial{-2, 0, 0, 1}));
    CHECK(squarefree_part(b * b * IntPolynomial{-3, 1}) == IntPolynomial{-3, -2, 1});
}

TEST_CASE("unimodular_transform")
{
    IntPolynomial const f{-2, 0, 0, 1};
    CHECK(unimodular_transform(f, {1, 1, 1, 0}) == IntPolynomial{-1, -3, -3, 1});
    CHECK(unimodular_transform(f, Unimodular2x2{}) == f);
    CHECK(discriminant(unimodular_transform(IntPolynomial{-1, -2, 1, 1}, {2, 1, 1, 1})) == 49);
    CHECK_THROWS_AS(unimodular_transform(f, {2, 0, 0, 1}), DomainError);
    /* x - 1 sends its root to the pole of t -> 1/(t - 1) */
    CHECK_THROWS_AS(unimodular_transform(IntPolynomial{-1, 1}, {1, 1, 1, 0}), DomainError);
}

TEST_CASE("unimodular_transform preserves discriminants and round-trips")
{
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 200) {
        IntPolynomial const f = primitive_part(random_poly(rng, 2 + done % 3, 30));
        if (f.degree() < 2 || !is_squarefree(f) || !rational_roots(f).empty())
            continue;
        Unimodular2x2 const g = random_unimodular(rng, 1 + done % 6);
        IntPolynomial const t = unimodular_transform(f, g);
        CHECK(t.degree() == f.degree());
        CHECK(t.is_primitive());
        CHECK(discriminant(t) == discriminant(f));
        CHECK(unimodular_transform(t, g.inverse()) == f);
        ++done;
    }
}

TEST_CASE("sturm_count")
{
    CHECK(sturm_count(IntPolynomial{-2, 0, 0, 1}, Rational(1), Rational(2)) == 1);
    CHECK(sturm_count(IntPolynomial{-1, -2, 1, 1}, Rational(-2), Rational(2)) == 3);
    CHECK(sturm_count(IntPolynomial{-2, 0, 0, 1}, Rational(-2), Rational(0)) == 0);
    CHECK_THROWS_AS(sturm_count(IntPolynomial{-1, 0, 1}, Rational(1), Rational(2)), DomainError);
    CHECK_THROWS_AS(sturm_count(IntPolynomial{-2, 0, 0, 1}, Rational(2), Rational(1)), DomainError);
}

TEST_CASE("sturm_count agrees with the numeric oracle on random cubics")
{
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<long> end(-400, 400);
    for (int i = 0; i < 50; ++i) {
        oracle::Coeffs const c = oracle::random_irreducible_cubic(rng, 20);
        IntPolynomial const f = bridge::poly_of(c);
        auto const roots = oracle::real_roots(c, 512);
        for (int trial = 0; trial < 5; ++trial) {
            Rational lo(end(rng), 37), hi(end(rng), 41);
            if (lo > hi)
                std::swap(lo, hi);
            if (lo == hi)
                continue;
            std::size_t brute = 0;
            for (auto const & r : roots)
                brute += bridge::cmp(r, lo) > 0 && bridge::cmp(r, hi) < 0;
            CHECK(sturm_count(f, lo, hi) == brute);
        }
        CHECK(isolate_real_roots(f).size() == roots.size());
    }
}

TEST_CASE("rational_roots")
{
    CHECK(rational_roots(IntPolynomial{-2, 0, 0, 1}).empty());
    CHECK(rational_roots(IntPolynomial{-1, -1, 1}).empty());
    auto const r = rational_roots(IntPolynomial{-3, 2});
    REQUIRE(r.size() == 1);
    CHECK(r[0] == Rational(3, 2));
}

TEST_CASE("rational_roots agrees with the divisor test")
{
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<long> small(-12, 12);
    for (int i = 0; i < 150; ++i) {
        IntPolynomial f = random_poly(rng, 3, 20);
        if (i % 2 == 0) {
            long q = small(rng);
            if (q == 0)
                q = 5;
            f = IntPolynomial{small(rng), q} * random_poly(rng, 2, 9);
        }
        if (f.coeff(0) == 0)
            continue;
        auto const mine = rational_roots(f);
        auto const brute = oracle::divisor_rational_roots(bridge::coeffs_of(f));
        REQUIRE(mine.size() == brute.size());
        for (std::size_t k = 0; k < mine.size(); ++k)
            CHECK(mine[k] == brute[k]);
    }
}

TEST_CASE("unimodular matrices")
{
    Unimodular2x2 const g = Unimodular2x2::step(3) * Unimodular2x2::step(1);
    CHECK(g.det() == 1);
    Unimodular2x2 const id = g * g.inverse();
    CHECK(id.a == 1);
    CHECK(id.b == 0);
    CHECK(id.c == 0);
    CHECK(id.d == 1);
    CHECK_THROWS_AS((Unimodular2x2{2, 0, 0, 1}.check()), DomainError);
}

TEST_CASE("polynomial printing")
{
    CHECK(IntPolynomial{-1, -2, 1, 1}.str() == "x^3 + x^2 - 2x - 1");
    CHECK(IntPolynomial{49, 0, -7, 1}.str() == "x^3 - 7x^2 + 49");
    CHECK(IntPolynomial{}.str() == "0");
    CHECK(IntPolynomial{0, -1}.str() == "-x");
}
