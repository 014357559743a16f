#include <doctest.h>

#include "../support/bridge.hpp"
#include "../support/frozen.hpp"

using namespace oracle;
using bridge::real;

namespace {

constexpr mpfr_prec_t P = 512;

Coeffs cubic(long c0, long c1, long c2, long c3) { return {c0, c1, c2, c3}; }

bool matches(Real const & x, char const * frozen_value)
{
    return bridge::abs_close(x, real(frozen_value, P), 1e-38);
}

} // namespace

TEST_CASE("oracle: real roots of the cyclotomic cubic are 2cos(2k pi/7)")
{
    auto const r = real_roots(cubic(-1, -2, 1, 1), P);
    REQUIRE(r.size() == 3);
    for (int k = 0; k < 3; ++k)
        CHECK(matches(r[k], frozen::cos_roots_7[k]));
    Real pi(P);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    Real c(P);
    mpfr_cos(c.get(), (Real(2L, P) * pi / Real(7L, P)).get(), MPFR_RNDN);
    CHECK(bridge::abs_close(r[2], Real(2L, P) * c, 1e-100));
}

TEST_CASE("oracle: closed forms agree with the frozen decimals")
{
    CHECK(matches(Real(1L, P) / root(Real(108L, P), 6), frozen::inv_sixth_root_108));
    CHECK(matches(root(Real(108L, P), 3), frozen::cbrt_108));
    CHECK(matches(root(Real(2L, P), 3), frozen::cbrt_2));
    CHECK(matches(root(Real(4L, P), 3), frozen::cbrt_4));
    CHECK(matches(Real(1L, P) / sqrt(Real(5L, P)), frozen::inv_sqrt5));
    CHECK(matches(Real(1L, P) / (Real(2L, P) * sqrt(Real(2L, P))), frozen::inv_2sqrt2));
    CHECK(matches(Real(1L, P) / (root(Real(2L, P), 3) - Real(1L, P)), frozen::cbrt2_tail1));
}

TEST_CASE("oracle: conjugate separation constant of the discriminant-49 field")
{
    Coeffs const f = cubic(-1, -2, 1, 1);
    Real const a = real_roots(f, P)[2];
    auto const [s1, s2] = cubic_conjugates(f, a);
    Real const beta = abs((s1.re - s2.re) / ((a - s1.re) * (a - s2.re)));
    CHECK(matches(beta, frozen::beta_disc49));
    Real const t = sqrt(Real(7L, P) / beta);
    CHECK(matches(t, frozen::sqrt_7_over_beta_disc49));
    Real const p = t * t * t - Real(7L, P) * t * t + Real(49L, P);
    CHECK(abs(p).to_double() < 1e-100);
}

TEST_CASE("oracle: complex conjugates of cbrt(2) by deflation")
{
    Coeffs const f = cubic(-2, 0, 0, 1);
    Real const a = real_roots(f, P).at(0);
    auto const [s1, s2] = cubic_conjugates(f, a);
    CHECK(bridge::abs_close(s1.re, -a / Real(2L, P), 1e-100));
    CHECK(bridge::abs_close(s1.im, a * sqrt(Real(3L, P)) / Real(2L, P), 1e-100));
    CHECK(bridge::abs_close(s2.im, -s1.im, 1e-100));
    /* |D|^(1/2) = |(a - s1)(a - s2)(s1 - s2)| */
    Real const prod = distance({a, Real(0L, P)}, s1) * distance({a, Real(0L, P)}, s2) * distance(s1, s2);
    CHECK(bridge::abs_close(prod, sqrt(Real(108L, P)), 1e-100));
}

TEST_CASE("oracle: continued fractions of known constants")
{
    auto const cf = root_continued_fraction(cubic(-2, 0, 0, 1), 1, 30, 2048);
    REQUIRE(cf.size() == 30);
    for (std::size_t i = 0; i < 30; ++i)
        CHECK(cf[i] == frozen::cbrt2_quotients[i]);
    auto const c7 = root_continued_fraction(cubic(-1, -2, 1, 1), 3, 8, 2048);
    REQUIRE(c7.size() == 8);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(c7[i] == frozen::cos7_quotients[i]);
    auto const s2 = root_continued_fraction({-2, 0, 1}, 2, 40, 2048);
    REQUIRE(s2.size() == 40);
    CHECK(s2[0] == 1);
    for (std::size_t i = 1; i < 40; ++i)
        CHECK(s2[i] == 2);
}

TEST_CASE("oracle: divisor rational-root test")
{
    CHECK(divisor_rational_roots({-2, 0, 0, 1}).empty());
    auto const r = divisor_rational_roots({-3, 2});
    REQUIRE(r.size() == 1);
    CHECK(r[0] == mpq_class(3, 2));
    CHECK(divisor_rational_roots({0, -1, 0, 1}).size() == 3);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        Coeffs const f = random_irreducible_cubic(rng, 20);
        CHECK(divisor_rational_roots(f).empty());
        CHECK(f[3] != 0);
    }
}
