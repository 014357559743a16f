#include "cubicf/fieldops.hpp"

#include <algorithm>
#include <array>

#include "cubicf/errors.hpp"

namespace cubicf {

namespace {

void require_cubic_field(AlgebraicNumber const & beta, char const * what)
{
    if (beta.degree() != 3 || !beta.irreducible())
        throw CubicOnlyError(what);
}

/* beta^3 = B0 + B1 beta + B2 beta^2 */
std::array<Rational, 3> power_reduction(IntPolynomial const & f)
{
    Rational const c3(f.coeff(3));
    return {Rational(-f.coeff(0) / c3), Rational(-f.coeff(1) / c3), Rational(-f.coeff(2) / c3)};
}

Integer lcm_of_denominators(std::span<Rational const> v)
{
    Integer l = 1;
    for (auto const & x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

FracLinearRep normalized(std::array<Integer, 4> v)
{
    Integer g = 0;
    for (auto const & x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0)
        throw InvariantViolation("express: zero solution vector");
    auto const first = std::find_if(v.begin(), v.end(), [](Integer const & x) { return x != 0; });
    if (*first < 0)
        g = -g;
    for (auto & x : v)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return {v[0], v[1], v[2], v[3]};
}

} // namespace

FracLinearRep express(AlgebraicNumber const & beta, FieldElement const & elem)
{
    require_cubic_field(beta, "express");
    if (elem.is_rational()) {
        FracLinearRep const r{0, elem.A0.get_num(), 0, elem.A0.get_den()};
        return r;
    }
    auto const [B0, B1, B2] = power_reduction(beta.minpoly());
    Rational const & A0 = elem.A0;
    Rational const & A1 = elem.A1;
    Rational const & A2 = elem.A2;

    /* unknowns (a, b, c, d) */
    std::array<std::array<Rational, 4>, 3> M{{
        {Rational(0), Rational(-1), Rational(A2 * B0), A0},
        {Rational(-1), Rational(0), Rational(A0 + A2 * B1), A1},
        {Rational(0), Rational(0), Rational(A1 + A2 * B2), A2},
    }};

    /* reduced row echelon form */
    std::array<int, 3> pivot_col{-1, -1, -1};
    std::size_t row = 0;
    for (int col = 0; col < 4 && row < 3; ++col) {
        std::size_t piv = row;
        while (piv < 3 && M[piv][col] == 0)
            ++piv;
        if (piv == 3)
            continue;
        std::swap(M[row], M[piv]);
        Rational const inv = 1 / M[row][col];
        for (auto & x : M[row])
            x *= inv;
        for (std::size_t r = 0; r < 3; ++r) {
            if (r == row || M[r][col] == 0)
                continue;
            Rational const factor = M[r][col];
            for (int k = 0; k < 4; ++k)
                M[r][k] -= factor * M[row][k];
        }
        pivot_col[row] = col;
        ++row;
    }
    if (row != 3)
        throw InvariantViolation("express: system has rank below 3 for an irrational element");

    int free_col = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end())
        ++free_col;
    std::array<Rational, 4> sol{};
    sol[free_col] = 1;
    for (std::size_t r = 0; r < 3; ++r)
        sol[pivot_col[r]] = -M[r][free_col];

    Integer const L = lcm_of_denominators(sol);
    std::array<Integer, 4> v;
    for (int k = 0; k < 4; ++k)
        v[k] = Integer(sol[k] * L);
    FracLinearRep const rep = normalized(v);

    if (rep.c == 0 && rep.d == 0)
        throw InvariantViolation("express: c beta + d vanishes");
    if (!express_residue(beta, elem, rep).is_zero())
        throw InvariantViolation("express: representation does not verify");
    return rep;
}

IntPolynomial express_residue(AlgebraicNumber const & beta, FieldElement const & elem,
                              FracLinearRep const & rep)
{
    std::array<Rational, 3> const A{elem.A0, elem.A1, elem.A2};
    Integer const L = lcm_of_denominators(A);
    IntPolynomial const P(std::vector<Integer>{Integer(A[0] * L), Integer(A[1] * L),
                                               Integer(A[2] * L)});
    IntPolynomial const lhs = IntPolynomial(std::vector<Integer>{rep.d, rep.c}) * P;
    IntPolynomial const rhs = L * IntPolynomial(std::vector<Integer>{rep.b, rep.a});
    IntPolynomial const diff = lhs - rhs;
    if (diff.is_zero())
        return diff;
    return reduce_mod(diff, beta.minpoly());
}

AlgebraicNumber as_algebraic(AlgebraicNumber const & beta, FieldElement const & elem)
{
    require_cubic_field(beta, "as_algebraic");
    if (elem.is_rational())
        throw DomainError("as_algebraic: element is rational");
    if (elem.A2 == 0 && elem.A1 == 1 && elem.A0 == 0)
        return beta;

    auto const [B0, B1, B2] = power_reduction(beta.minpoly());
    auto times_beta = [&](std::array<Rational, 3> const & v) {
        return std::array<Rational, 3>{Rational(v[2] * B0), Rational(v[0] + v[2] * B1),
                                       Rational(v[1] + v[2] * B2)};
    };
    /* columns: coordinates of elem, elem*beta, elem*beta^2 */
    std::array<std::array<Rational, 3>, 3> col;
    col[0] = {elem.A0, elem.A1, elem.A2};
    col[1] = times_beta(col[0]);
    col[2] = times_beta(col[1]);
    auto m = [&](int i, int j) -> Rational const & { return col[j][i]; };

    Rational const tr = m(0, 0) + m(1, 1) + m(2, 2);
    Rational const minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2)
                            - m(0, 2) * m(2, 0) + m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    Rational const det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                         - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                         + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    std::array<Rational, 4> const cp{Rational(-det), minors, Rational(-tr), Rational(1)};
    Integer const L = lcm_of_denominators(cp);
    std::vector<Integer> ic;
    for (auto const & x : cp)
        ic.emplace_back(x * L);
    IntPolynomial const g = primitive_part(IntPolynomial(std::move(ic)));
    if (!rational_roots(g).empty())
        throw InvariantViolation("as_algebraic: characteristic polynomial is reducible");

    std::array<Rational, 3> const A{elem.A0, elem.A1, elem.A2};
    AlgebraicNumber b = beta;
    for (;;) {
        Interval const v = eval(std::span<Rational const>(A), b.enclosure());
        if (v.lo() < v.hi() && sign_at_rational(g, v.lo()) != 0 && sign_at_rational(g, v.hi()) != 0
            && sturm_count(g, v.lo(), v.hi()) == 1)
            return floor_refined(AlgebraicNumber::from_isolating_interval(g, v.lo(), v.hi(), true))
                .second;
        b = refine(b, Rational(b.width() / 256));
    }
}

AlgebraicNumber apply_rep(AlgebraicNumber const & beta, FracLinearRep const & rep)
{
    if (rep.det() == 0)
        throw DomainError("apply_rep: ad - bc = 0");
    if (beta.is_rational())
        throw DomainError("apply_rep: beta is rational");
    /* roots of f(g x) are g^-1 of the roots of f; use g = adj(rep) */
    IntPolynomial const raw = moebius_substitute(beta.minpoly(), rep.d, Integer(-rep.b),
                                                 Integer(-rep.c), rep.a);
    if (raw.degree() != beta.degree())
        throw InvariantViolation("apply_rep: degree drop");
    IntPolynomial const g = primitive_part(raw);

    AlgebraicNumber b = beta;
    for (;;) {
        Rational const dl = rep.c * b.lo() + rep.d;
        Rational const dh = rep.c * b.hi() + rep.d;
        if (sign(dl) * sign(dh) > 0) {
            Rational const y1 = (rep.a * b.lo() + rep.b) / dl;
            Rational const y2 = (rep.a * b.hi() + rep.b) / dh;
            Rational const lo = std::min(y1, y2);
            Rational const hi = std::max(y1, y2);
            if (lo < hi && sturm_count(g, lo, hi) == 1)
                return floor_refined(
                           AlgebraicNumber::from_isolating_interval(g, lo, hi, beta.irreducible()))
                    .second;
        }
        b = refine(b, Rational(b.width() / 16));
    }
}

TailMatch tails_match(Expansion const & e1, Expansion const & e2, std::size_t window)
{
    TailMatch out;
    out.window = window;
    if (window == 0 || window > e1.depth() || window > e2.depth())
        return out;
    std::size_t const max_i = e1.depth() - window;
    std::size_t const max_j = e2.depth() - window;

    std::vector<std::optional<AlgebraicNumber>> cache1(max_i + 1), cache2(max_j + 1);
    auto tail = [](Expansion const & e, std::vector<std::optional<AlgebraicNumber>> & cache,
                   std::size_t i) -> AlgebraicNumber const & {
        if (!cache[i])
            cache[i] = e.tail(i + 1);
        return *cache[i];
    };
    auto block_equal = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < window; ++k)
            if (e1.steps()[i + k].a != e2.steps()[j + k].a)
                return false;
        return true;
    };
    auto poly_at = [](Expansion const & e, std::size_t i) -> IntPolynomial const & {
        return i == 0 ? e.origin().minpoly() : e.steps()[i - 1].tail_poly;
    };

    for (std::size_t s = 0; s <= max_i + max_j; ++s) {
        std::size_t const i_lo = s > max_j ? s - max_j : 0;
        for (std::size_t i = i_lo; i <= std::min(s, max_i); ++i) {
            std::size_t const j = s - i;
            if (!block_equal(i, j) || poly_at(e1, i) != poly_at(e2, j))
                continue;
            if (same_root(tail(e1, cache1, i), tail(e2, cache2, j))) {
                out.found = true;
                out.i = i;
                out.j = j;
                return out;
            }
        }
    }
    return out;
}

LambdaTransferReport lambda_transfer_check(Expansion const & e_alpha, Expansion const & e_beta,
                                           FracLinearRep const & rep)
{
    if (rep.det() == 0)
        throw DomainError("lambda_transfer_check: ad - bc = 0");
    if (e_alpha.depth() < 10 || e_beta.depth() < 10)
        throw DomainError("lambda_transfer_check needs depth >= 10");
    if (!same_root(apply_rep(e_beta.origin(), rep), e_alpha.origin()))
        throw DomainError("lambda_transfer_check: representation does not relate the origins");

    LambdaTransferReport r;
    r.det = rep.det();
    r.lambda_alpha = lambda_estimate(e_alpha);
    r.lambda_beta = lambda_estimate(e_beta);
    Rational const k(abs(r.det));
    r.beta_bound_consistent = r.lambda_beta.lo() <= k * r.lambda_alpha.hi();
    r.alpha_bound_consistent = r.lambda_alpha.lo() <= k * r.lambda_beta.hi();
    r.estimates_overlap = r.lambda_alpha.overlaps(r.lambda_beta);
    return r;
}

BoundednessProfile boundedness_profile(Expansion const & e)
{
    if (e.depth() < 10)
        throw DomainError("boundedness_profile needs depth >= 10");
    unsigned long const m = static_cast<unsigned long>(e.origin().degree());
    BoundednessProfile p;
    p.max_quotient = e.steps().front().a;
    bool first = true;
    for (auto const & s : e.steps()) {
        p.max_quotient = std::max(p.max_quotient, s.a);
        p.running_max.push_back(p.max_quotient);
        ++p.histogram[s.a];
        Rational const ts = make_rational(abs(s.C), ipow(s.q, m - 2));
        if (first || ts < p.thue_siegel_min) {
            p.thue_siegel_min = ts;
            p.thue_siegel_argmin = s.n;
            first = false;
        }
    }
    return p;
}

} // namespace cubicf
