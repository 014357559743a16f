#include "cubicf/realroot.hpp"

#include <algorithm>

#include "cubicf/errors.hpp"

namespace cubicf {

AlgebraicNumber AlgebraicNumber::from_isolating_interval(IntPolynomial const & f, Rational lo,
                                                         Rational hi, bool irreducible)
{
    if (f.degree() < 1)
        throw DomainError("algebraic number needs a polynomial of degree >= 1");
    IntPolynomial g = primitive_part(f);
    if (!is_squarefree(g))
        throw DomainError("minimal polynomial must be squarefree");
    if (!(lo < hi))
        throw InvariantViolation("isolating interval is empty");
    int const slo = sign_at_rational(g, lo);
    int const shi = sign_at_rational(g, hi);
    if (slo == 0 || shi == 0)
        throw InvariantViolation("isolating interval endpoint is a root");
    if (sturm_count(g, lo, hi) != 1)
        throw InvariantViolation("interval does not isolate exactly one root");
    return AlgebraicNumber(std::make_shared<IntPolynomial const>(std::move(g)), std::move(lo),
                           std::move(hi), slo, irreducible || f.degree() == 1);
}

AlgebraicNumber AlgebraicNumber::from_rational(Rational const & r)
{
    IntPolynomial f(std::vector<Integer>{-r.get_num(), r.get_den()});
    Rational lo = r - 1;
    Rational hi = r + 1;
    int const s = sign_at_rational(f, lo);
    return AlgebraicNumber(std::make_shared<IntPolynomial const>(std::move(f)), std::move(lo),
                           std::move(hi), s, true);
}

Rational AlgebraicNumber::rational_value() const
{
    if (!is_rational())
        throw DomainError("rational_value of an irrational number");
    return make_rational(-f_->coeff(0), f_->coeff(1));
}

AlgebraicNumber AlgebraicNumber::bisect() const
{
    if (is_rational()) {
        Rational const r = rational_value();
        Rational const w = width() / 4;
        return AlgebraicNumber(f_, r - w, r + w, sign_lo_, irreducible_);
    }
    Rational mid = (lo_ + hi_) / 2;
    int const s = sign_at_rational(*f_, mid);
    if (s == 0)
        throw InvariantViolation("bisection midpoint is a root of an irrational's polynomial");
    if (s == sign_lo_)
        return AlgebraicNumber(f_, std::move(mid), hi_, sign_lo_, irreducible_);
    return AlgebraicNumber(f_, lo_, std::move(mid), sign_lo_, irreducible_);
}

AlgebraicNumber AlgebraicNumber::with_interval(Rational lo, Rational hi) const
{
    if (!(lo_ <= lo && lo < hi && hi <= hi_))
        throw InvariantViolation("with_interval: not a sub-interval");
    int const slo = sign_at_rational(*f_, lo);
    int const shi = sign_at_rational(*f_, hi);
    if (is_rational()) {
        Rational const r = rational_value();
        if (!(lo < r && r < hi))
            throw InvariantViolation("with_interval: root not inside");
    } else if (slo == 0 || shi == 0 || slo == shi) {
        throw InvariantViolation("with_interval: root not inside");
    }
    return AlgebraicNumber(f_, std::move(lo), std::move(hi), slo, irreducible_);
}

AlgebraicNumber make_algebraic(IntPolynomial const & f, RootSelector const & sel, Rationality req)
{
    if (f.degree() < 1)
        throw DomainError("polynomial must have degree >= 1");
    IntPolynomial const g = primitive_part(f);
    if (!is_squarefree(g))
        throw ReducibleError("polynomial is not squarefree: " + g.str());

    bool irreducible = false;
    if (g.degree() <= 3) {
        if (g.degree() >= 2 && !rational_roots(g).empty())
            throw ReducibleError("polynomial " + g.str() + " has a rational root");
        irreducible = true;
    }

    std::vector<IsolatedRoot> const roots = isolate_real_roots(g);
    IsolatedRoot chosen;
    if (sel.is_index()) {
        std::size_t const k = sel.k();
        if (k < 1 || k > roots.size())
            throw RootSelectionError("root index " + std::to_string(k) + " out of range: "
                                     + g.str() + " has " + std::to_string(roots.size())
                                     + " real root(s)");
        chosen = roots[k - 1];
    } else {
        auto const & [lo, hi] = sel.bounds();
        if (!(lo < hi))
            throw RootSelectionError("empty selection interval");
        if (sign_at_rational(g, lo) == 0 || sign_at_rational(g, hi) == 0)
            throw RootSelectionError("selection interval endpoint is a root");
        if (sturm_count(g, lo, hi) != 1)
            throw RootSelectionError("selection interval does not isolate exactly one root");
        chosen = {lo, hi, std::nullopt};
    }

    /* a reducible higher-degree g may have the selected root rational */
    if (g.degree() >= 4 && !chosen.exact) {
        for (auto const & r : rational_roots(g))
            if (chosen.lo < r && r < chosen.hi)
                chosen.exact = r;
    }

    if (chosen.exact || g.degree() == 1) {
        if (req == Rationality::require_irrational)
            throw ReducibleError("selected root is rational");
        if (chosen.exact)
            return AlgebraicNumber::from_rational(*chosen.exact);
    }
    AlgebraicNumber const x =
        AlgebraicNumber::from_isolating_interval(g, chosen.lo, chosen.hi, irreducible);
    if (g.degree() == 1)
        return x;
    return floor_refined(x).second;
}

AlgebraicNumber refine(AlgebraicNumber const & x, Rational const & width_bound)
{
    if (width_bound <= 0)
        throw DomainError("refine: width bound must be positive");
    AlgebraicNumber y = x;
    while (y.width() > width_bound)
        y = y.bisect();
    return y;
}

int sign_at(AlgebraicNumber const & x, IntPolynomial const & h)
{
    if (h.is_zero())
        return 0;
    if (x.is_rational())
        return sign(eval_at_rational(h, x.rational_value()));
    IntPolynomial const r = reduce_mod(h, x.minpoly());
    if (r.is_zero())
        return 0;
    if (r.degree() == 0)
        return sign(r.coeff(0));
    if (!x.irreducible()) {
        IntPolynomial const g = gcd(x.minpoly(), r);
        if (g.degree() >= 1 && sturm_count(g, x.lo(), x.hi()) == 1)
            return 0;
    }
    /* r(x) != 0 now: narrow until the interval image excludes zero */
    AlgebraicNumber y = x;
    for (;;) {
        Interval const v = eval(r, y.enclosure());
        if (v.positive())
            return 1;
        if (v.negative())
            return -1;
        y = y.bisect();
    }
}

std::pair<Integer, AlgebraicNumber> floor_refined(AlgebraicNumber const & x)
{
    if (x.is_rational()) {
        Rational const r = x.rational_value();
        return {floor_of(r), x};
    }
    AlgebraicNumber y = x;
    for (;;) {
        Integer const fl = floor_of(y.lo());
        if (y.hi() <= Rational(fl + 1))
            return {fl, y};
        /* integers strictly inside (lo, hi): fl+1 .. top; split at one of them */
        Integer const top = ceil_of(y.hi()) - 1;
        Integer k = (fl + 1 + top) / 2;
        int const s = sign_at_rational(y.minpoly(), Rational(k));
        if (s == 0)
            throw InvariantViolation("integer root of an irrational's polynomial");
        if (s == sign_at_rational(y.minpoly(), y.lo()))
            y = y.with_interval(Rational(k), y.hi());
        else
            y = y.with_interval(y.lo(), Rational(k));
    }
}

Integer floor_of(AlgebraicNumber const & x)
{
    return floor_refined(x).first;
}

std::string approximate(AlgebraicNumber const & x, int digits)
{
    if (digits < 1)
        throw DomainError("approximate: digits must be >= 1");
    if (x.is_rational())
        return to_decimal(x.rational_value(), digits, 0);
    AlgebraicNumber y = x;
    for (;;) {
        std::string const a = to_decimal(y.lo(), digits, 0);
        if (a == to_decimal(y.hi(), digits, 0))
            return a;
        y = y.bisect();
    }
}

bool same_root(AlgebraicNumber const & x, AlgebraicNumber const & y)
{
    Rational const lo = std::max(x.lo(), y.lo());
    Rational const hi = std::min(x.hi(), y.hi());
    if (!(lo < hi))
        return false;
    if (x.minpoly() == y.minpoly())
        return sturm_count(x.minpoly(), lo, hi) == 1;
    IntPolynomial const g = gcd(x.minpoly(), y.minpoly());
    if (g.degree() < 1)
        return false;
    return sturm_count(g, lo, hi) >= 1;
}

} // namespace cubicf
