#include "cubicf/cfengine.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cubicf/errors.hpp"

namespace cubicf {

AlgebraicNumber CFStep::tail() const
{
    return AlgebraicNumber::from_isolating_interval(tail_poly, tail_lo, tail_hi, true);
}

AlgebraicNumber Expansion::tail(std::size_t k) const
{
    if (k == 0 || k > steps_.size() + 1)
        throw DomainError("tail index out of range");
    if (k == 1)
        return origin_;
    return steps_[k - 2].tail();
}

std::vector<Integer> Expansion::partial_quotients() const
{
    std::vector<Integer> out;
    out.reserve(steps_.size());
    for (auto const & s : steps_)
        out.push_back(s.a);
    return out;
}

IntPolynomial direct_tail_poly(IntPolynomial const & f0, Unimodular2x2 const & gamma)
{
    return unimodular_transform(f0, gamma);
}

IntPolynomial tail_poly_direct(AlgebraicNumber const & x, CFStep const & step)
{
    IntPolynomial const direct = direct_tail_poly(x.minpoly(), step.gamma());
    if (direct != step.tail_poly)
        throw InvariantViolation("tail polynomial mismatch at step " + std::to_string(step.n)
                                 + ": local " + step.tail_poly.str() + " vs direct " + direct.str());
    return direct;
}

namespace {

/* Narrow x until its interval sits strictly inside (a, a + 1). */
AlgebraicNumber strictly_inside(AlgebraicNumber x, Integer const & a)
{
    Rational const lo(a);
    Rational const hi(a + 1);
    while (!(x.lo() > lo && x.hi() < hi))
        x = x.bisect();
    return x;
}

} // namespace

Expansion expand(AlgebraicNumber const & x, std::size_t depth, ExpandOptions const & opts)
{
    if (x.degree() < 2)
        throw DomainError("expand: input is rational");
    if (depth == 0 || depth > max_expansion_depth)
        throw DomainError("expand: depth must be in [1, " + std::to_string(max_expansion_depth) + "]");

    std::size_t const cadence = opts.crosscheck_every != 0 ? opts.crosscheck_every
                                                           : (depth <= 100 ? 1 : 10);
    IntPolynomial const & f0 = x.minpoly();
    unsigned long const m = static_cast<unsigned long>(f0.degree());

    std::vector<CFStep> steps;
    steps.reserve(depth);
    std::optional<Period> period;
    /* quadratic tails seen so far, keyed by polynomial: tail index k of alpha_k */
    std::map<std::string, std::vector<std::size_t>> seen;
    if (m == 2)
        seen[f0.str()].push_back(1);

    Integer p_prev2 = 0, q_prev2 = 1;
    Integer p_prev = 1, q_prev = 0;
    AlgebraicNumber cur = x;

    for (std::size_t n = 1; n <= depth; ++n) {
        auto [a, refined] = floor_refined(cur);
        refined = strictly_inside(std::move(refined), a);

        CFStep s;
        s.n = n;
        s.a = a;
        s.p = a * p_prev + p_prev2;
        s.q = a * q_prev + q_prev2;
        s.p_prev = p_prev;
        s.q_prev = q_prev;
        s.tail_poly = unimodular_transform(cur.minpoly(), Unimodular2x2::step(a));
        /* t -> 1/(t - a) is decreasing on (a, a + 1) */
        s.tail_lo = 1 / (refined.hi() - a);
        s.tail_hi = 1 / (refined.lo() - a);
        s.bits = s.tail_poly.max_coeff_bits();

        Integer const v = eval_homogeneous(f0, s.p, s.q);
        s.C = (n % 2 == 1) ? Integer(-v) : v;

        Integer const det = s.p * s.q_prev - s.p_prev * s.q;
        if (det != ((n % 2 == 1) ? -1 : 1))
            throw InvariantViolation("determinant identity fails at step " + std::to_string(n));
        if (abs(s.C) != s.tail_poly.leading())
            throw InvariantViolation("|C_n| differs from the tail leading coefficient at step "
                                     + std::to_string(n));
        if (n >= 2 && s.a < 1)
            throw InvariantViolation("partial quotient below 1 at step " + std::to_string(n));

        AlgebraicNumber tail = AlgebraicNumber::from_isolating_interval(
            s.tail_poly, s.tail_lo, s.tail_hi, cur.irreducible());
        if (!(tail.lo() >= 1))
            throw InvariantViolation("tail interval not in (1, oo) at step " + std::to_string(n));

        if (n % cadence == 0 || n == depth) {
            tail_poly_direct(x, s);
            s.crosschecked = true;
        }

        if (m == 2 && !period) {
            auto & prev = seen[s.tail_poly.str()];
            for (std::size_t k : prev) {
                if (same_root(k == 1 ? x : steps[k - 2].tail(), tail)) {
                    period = Period{k, n + 1 - k};
                    break;
                }
            }
            prev.push_back(n + 1);
        }

        p_prev2 = p_prev;
        q_prev2 = q_prev;
        p_prev = s.p;
        q_prev = s.q;
        steps.push_back(std::move(s));
        cur = std::move(tail);
    }
    return Expansion(x, std::move(steps), period);
}

std::vector<ApproximationStat> approximation_stats(Expansion const & e, Rational const & precision)
{
    if (e.depth() < 2)
        throw DomainError("approximation_stats needs depth >= 2");
    if (precision <= 0)
        throw DomainError("approximation_stats: precision must be positive");
    int const m = e.origin().degree();
    std::vector<ApproximationStat> out;
    out.reserve(e.depth());
    for (auto const & s : e.steps()) {
        /* |q alpha - p| = 1/(q alpha_{n+1} + q_prev); the map t -> q/(q t + q')
         * has slope below 1 in absolute value for t > 1 */
        AlgebraicNumber const t = refine(s.tail(), precision);
        Interval const q(Rational(s.q));
        Interval const denom = q * t.enclosure() + Interval(Rational(s.q_prev));
        ApproximationStat st;
        st.n = s.n;
        st.scaled_error = q / denom;
        st.thue_siegel = make_rational(abs(s.C), ipow(s.q, static_cast<unsigned long>(m - 2)));
        out.push_back(std::move(st));
    }
    return out;
}

Interval lambda_estimate(Expansion const & e)
{
    if (e.depth() < 5)
        throw DomainError("lambda_estimate needs depth >= 5");
    std::vector<ApproximationStat> const stats = approximation_stats(e);
    std::size_t const start = std::min(lambda_burn_in, e.depth() / 2) + 1;
    Rational lo = stats[start - 1].scaled_error.lo();
    Rational hi = stats[start - 1].scaled_error.hi();
    for (std::size_t k = start; k < stats.size(); ++k) {
        lo = std::min(lo, stats[k].scaled_error.lo());
        hi = std::min(hi, stats[k].scaled_error.hi());
    }
    return {lo, hi};
}

} // namespace cubicf
