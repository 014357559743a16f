#include <random>

#include <doctest.h>

#include "cubicf/errors.hpp"
#include "cubicf/realroot.hpp"
#include "../support/bridge.hpp"
#include "../support/frozen.hpp"

using namespace cubicf;

namespace {

AlgebraicNumber cbrt2() { return make_algebraic(IntPolynomial{-2, 0, 0, 1}, RootSelector::index(1)); }

bool isolates(AlgebraicNumber const & x)
{
    return sturm_count(x.minpoly(), x.lo(), x.hi()) == 1;
}

struct RandomRoot {
    oracle::Coeffs c;
    std::size_t k;
    AlgebraicNumber x;
};

RandomRoot random_root(std::mt19937_64 & rng)
{
    oracle::Coeffs const c = oracle::random_irreducible_cubic(rng, 20);
    IntPolynomial const f = bridge::poly_of(c);
    std::size_t const n = bridge::real_root_count(f);
    std::size_t const k = 1 + rng() % n;
    return {c, k, make_algebraic(f, RootSelector::index(k))};
}

} // namespace

TEST_CASE("make_algebraic")
{
    AlgebraicNumber const a = cbrt2();
    CHECK(a.lo() >= 1);
    CHECK(a.hi() <= 2);
    CHECK(a.irreducible());
    CHECK(isolates(a));

    AlgebraicNumber const c = make_algebraic(IntPolynomial{-1, -2, 1, 1}, RootSelector::index(3));
    CHECK(bridge::encloses(c, bridge::real(frozen::cos_roots_7[2])));
    CHECK(approximate(c, 5) == "1.24698");

    CHECK_THROWS_AS(make_algebraic(IntPolynomial{-2, 0, 0, 1}, RootSelector::index(2)), RootSelectionError);
    CHECK_THROWS_AS(make_algebraic(IntPolynomial{-2, 0, 0, 1}, RootSelector::index(0)), RootSelectionError);
    CHECK_THROWS_AS(make_algebraic(IntPolynomial{-1, 0, 1}, RootSelector::index(1)), ReducibleError);
    CHECK_THROWS_AS(make_algebraic(IntPolynomial{1, 2, 1}, RootSelector::index(1)), ReducibleError);
    CHECK_THROWS_AS(make_algebraic(IntPolynomial{5}, RootSelector::index(1)), DomainError);
}

TEST_CASE("make_algebraic with an interval selector")
{
    IntPolynomial const f{-1, -2, 1, 1};
    AlgebraicNumber const mid = make_algebraic(f, RootSelector::interval(Rational(-1), Rational(0)));
    CHECK(bridge::encloses(mid, bridge::real(frozen::cos_roots_7[1])));
    CHECK_THROWS_AS(make_algebraic(f, RootSelector::interval(Rational(-2), Rational(2))), RootSelectionError);
    CHECK_THROWS_AS(make_algebraic(f, RootSelector::interval(Rational(3), Rational(4))), RootSelectionError);
    CHECK_THROWS_AS(make_algebraic(f, RootSelector::interval(Rational(1), Rational(0))), RootSelectionError);
    CHECK_THROWS_AS(make_algebraic(IntPolynomial{1, 2, 1} * IntPolynomial{-2, 0, 0, 1},
                                   RootSelector::interval(Rational(1), Rational(2))),
                    ReducibleError);
}

TEST_CASE("rational roots of higher-degree and linear inputs")
{
    /* (x - 3)(x^3 - 2) */
    IntPolynomial const f = IntPolynomial{-3, 1} * IntPolynomial{-2, 0, 0, 1};
    AlgebraicNumber const three = make_algebraic(f, RootSelector::index(2));
    CHECK(three.is_rational());
    CHECK(three.rational_value() == 3);
    CHECK_THROWS_AS(make_algebraic(f, RootSelector::index(2), Rationality::require_irrational), ReducibleError);
    AlgebraicNumber const a = make_algebraic(f, RootSelector::index(1), Rationality::require_irrational);
    CHECK_FALSE(a.irreducible());
    CHECK(same_root(a, cbrt2()));
    AlgebraicNumber const half = make_algebraic(IntPolynomial{-1, 2}, RootSelector::index(1));
    CHECK(half.rational_value() == Rational(1, 2));
    CHECK_THROWS_AS(make_algebraic(IntPolynomial{-1, 2}, RootSelector::index(1), Rationality::require_irrational), ReducibleError);
}

TEST_CASE("refine")
{
    AlgebraicNumber const a = refine(cbrt2(), Rational(1, 1000));
    CHECK(a.width() <= Rational(1, 1000));
    CHECK(a.lo() > Rational(1259, 1000));
    CHECK(a.hi() < Rational(1261, 1000));
    CHECK(isolates(a));
    AlgebraicNumber const b = refine(a, Rational(1, 1000));
    CHECK(b.lo() == a.lo());
    CHECK(b.hi() == a.hi());

    AlgebraicNumber const phi = refine(make_algebraic(IntPolynomial{-1, -1, 1}, RootSelector::index(2)), Rational(1, 100));
    CHECK(phi.lo() > Rational(16, 10));
    CHECK(phi.hi() < Rational(163, 100));
    CHECK_THROWS_AS(refine(a, Rational(0)), DomainError);
}

TEST_CASE("sign_at")
{
    AlgebraicNumber const a = cbrt2();
    CHECK(sign_at(a, IntPolynomial{-2, 0, 0, 1}) == 0);
    CHECK(sign_at(a, IntPolynomial{-1, 1}) == 1);
    CHECK(sign_at(a, IntPolynomial{-4, 0, 1}) == -1);
    CHECK(sign_at(a, IntPolynomial{-4, 0, 0, 2}) == 0);
    CHECK(sign_at(a, IntPolynomial{-2, 0, 0, 1} * IntPolynomial{7, 1, 3}) == 0);
    CHECK(sign_at(a, IntPolynomial{}) == 0);
    CHECK(sign_at(a, IntPolynomial{-3}) == -1);
}

TEST_CASE("sign_at agrees with the numeric oracle")
{
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (int i = 0; i < 100; ++i) {
        RandomRoot const r = random_root(rng);
        std::vector<Integer> hc;
        for (int j = 0; j <= 1 + i % 4; ++j)
            hc.emplace_back(coef(rng));
        IntPolynomial const h(hc);
        oracle::Real const alpha = oracle::real_roots(r.c, 1024).at(r.k - 1);
        oracle::Real const hv = oracle::horner(bridge::coeffs_of(h), alpha);
        CHECK(sign_at(r.x, h) == hv.sgn());
    }
}

TEST_CASE("floor_of")
{
    CHECK(floor_of(cbrt2()) == 1);
    CHECK(floor_of(make_algebraic(IntPolynomial{-1, -2, 1, 1}, RootSelector::index(3))) == 1);
    CHECK(floor_of(make_algebraic(IntPolynomial{-1, -3, -3, 1}, RootSelector::index(1))) == 3);
    CHECK(floor_of(make_algebraic(IntPolynomial{-1, -2, 1, 1}, RootSelector::index(1))) == -2);
    CHECK(floor_of(make_algebraic(IntPolynomial{-1, -2, 1, 1}, RootSelector::index(2))) == -1);
}

TEST_CASE("floor_of a root within 1e-18 of an integer")
{
    Integer const big("1000000000");
    /* x^3 - 10^9 x^2 - 1 has a root just above 10^9 */
    IntPolynomial const f(std::vector<Integer>{-1, 0, Integer(-big), 1});
    AlgebraicNumber const x = make_algebraic(f, RootSelector::index(1));
    CHECK(floor_of(x) == big);
    /* x^3 - 10^9 x^2 + 1 has one just below */
    IntPolynomial const g(std::vector<Integer>{1, 0, Integer(-big), 1});
    AlgebraicNumber const y = make_algebraic(g, RootSelector::index(3));
    CHECK(floor_of(y) == big - 1);
}

TEST_CASE("floor_of brackets exactly and matches the oracle")
{
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
        RandomRoot const r = random_root(rng);
        Integer const m = floor_of(r.x);
        CHECK(sign_at(r.x, IntPolynomial(std::vector<Integer>{Integer(-m), 1})) == 1);
        CHECK(sign_at(r.x, IntPolynomial(std::vector<Integer>{Integer(-m - 1), 1})) == -1);
        CHECK(m == oracle::real_roots(r.c, 512).at(r.k - 1).floor());
        auto const [m2, refined] = floor_refined(r.x);
        CHECK(m2 == m);
        CHECK(refined.lo() >= m);
        CHECK(refined.hi() <= m + 1);
        CHECK(isolates(refined));
    }
}

TEST_CASE("approximate")
{
    CHECK(approximate(cbrt2(), 6) == "1.259921");
    CHECK(approximate(make_algebraic(IntPolynomial{-1, -1, 1}, RootSelector::index(2)), 5) == "1.61803");
    CHECK(approximate(cbrt2(), 1) == "1.3");
    CHECK(approximate(make_algebraic(IntPolynomial{2, 0, 0, 1}, RootSelector::index(1)), 3) == "-1.260");
    CHECK_THROWS_AS(approximate(cbrt2(), 0), DomainError);
}

TEST_CASE("approximate is within half a unit of the last digit")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        RandomRoot const r = random_root(rng);
        int const d = 1 + i % 25;
        std::string const s = approximate(r.x, d);
        oracle::Real const got = bridge::real(s.c_str());
        oracle::Real const alpha = oracle::real_roots(r.c, 1024).at(r.k - 1);
        oracle::Real half(1024);
        mpfr_set_str(half.get(), ("5e-" + std::to_string(d + 1)).c_str(), 10, MPFR_RNDU);
        CHECK_FALSE(oracle::abs(got - alpha) > half);
    }
}

TEST_CASE("bisection keeps exactly one root")
{
    AlgebraicNumber x = cbrt2();
    for (int i = 0; i < 40; ++i) {
        x = x.bisect();
        CHECK(isolates(x));
    }
    CHECK(x.width() < Rational(1, 1000000000));
    CHECK(bridge::encloses(x, bridge::real(frozen::cbrt_2)));
    CHECK_THROWS_AS(x.with_interval(Rational(0), Rational(1)), InvariantViolation);
    CHECK_THROWS_AS(AlgebraicNumber::from_isolating_interval(IntPolynomial{-1, -2, 1, 1}, Rational(-2), Rational(2), true),
                    InvariantViolation);
}

TEST_CASE("same_root")
{
    AlgebraicNumber const a = cbrt2();
    AlgebraicNumber const b = refine(a, Rational(1, 1000000));
    CHECK(same_root(a, b));
    AlgebraicNumber const c = make_algebraic(IntPolynomial{-1, -2, 1, 1}, RootSelector::index(3));
    CHECK_FALSE(same_root(a, c));
    /* 2x^3 - 4 normalizes to x^3 - 2 */
    CHECK(same_root(a, make_algebraic(IntPolynomial{-4, 0, 0, 2}, RootSelector::index(1))));
    CHECK_FALSE(same_root(make_algebraic(IntPolynomial{-1, -2, 1, 1}, RootSelector::index(1)),
                          make_algebraic(IntPolynomial{-1, -2, 1, 1}, RootSelector::index(2))));
}
