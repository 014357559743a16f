#include "cubicf/conjlab.hpp"

#include <algorithm>

#include "cubicf/errors.hpp"

namespace cubicf {

Rational default_precision()
{
    return make_rational(1, ipow(10, 15));
}

namespace {

constexpr unsigned long start_bits = 64;
constexpr unsigned long max_bits = 1ul << 22;

void require_cubic(AlgebraicNumber const & x, char const * what)
{
    if (x.degree() != 3)
        throw CubicOnlyError(what);
}

Rational pow2_inv(unsigned long bits)
{
    return make_rational(1, ipow(2, bits));
}

/* Produces conjugate enclosures of a cubic at increasing precision. The
 * totally real case isolates the two other roots once and keeps refining
 * them; the complex case refines alpha and evaluates trace and norm of the
 * quadratic cofactor. */
class ConjugateSolver {
public:
    explicit ConjugateSolver(AlgebraicNumber const & x)
        : alpha_(x)
    {
        require_cubic(x, "conjugates");
        IntPolynomial const & f = x.minpoly();
        c3_ = Rational(f.coeff(3));
        c2_ = Rational(f.coeff(2));
        c0_ = Rational(f.coeff(0));
        kind_ = discriminant(f) > 0 ? ConjugateKind::two_real : ConjugateKind::complex_pair;
        if (kind_ == ConjugateKind::two_real) {
            for (auto const & r : isolate_real_roots(f)) {
                AlgebraicNumber y = AlgebraicNumber::from_isolating_interval(f, r.lo, r.hi, true);
                if (!same_root(y, x))
                    others_.push_back(std::move(y));
            }
            if (others_.size() != 2)
                throw InvariantViolation("totally real cubic without two other real roots");
        }
    }

    ConjugateKind kind() const { return kind_; }

    /// Conjugates with inputs refined to width <= 2^-bits; nullopt when the
    /// enclosure is still too coarse to be meaningful.
    std::optional<ConjugatePair> at(unsigned long bits)
    {
        Rational const w = pow2_inv(bits);
        alpha_ = refine(alpha_, w);
        ConjugatePair c;
        c.kind = kind_;
        c.alpha = alpha_.enclosure();
        if (kind_ == ConjugateKind::two_real) {
            for (auto & o : others_)
                o = refine(o, w);
            c.re1 = others_[0].enclosure();
            c.re2 = others_[1].enclosure();
            c.im1 = c.im2 = Interval(Rational(0));
            return c;
        }
        Interval const s = Interval(Rational(-c2_ / c3_)) - c.alpha;
        Interval const P = Interval(Rational(-c0_ / c3_)) / c.alpha;
        Interval const re = s * Interval(Rational(1, 2));
        Interval const im2 = P - square(re);
        if (!im2.positive())
            return std::nullopt;
        c.re1 = c.re2 = re;
        c.im1 = sqrt(im2, bits + 16);
        c.im2 = -c.im1;
        return c;
    }

private:
    AlgebraicNumber alpha_;
    Rational c3_, c2_, c0_;
    ConjugateKind kind_;
    std::vector<AlgebraicNumber> others_;
};

/* Runs `attempt(solver, bits)` with doubling bits until it returns a value. */
template <typename F>
auto with_increasing_precision(ConjugateSolver & solver, F attempt)
{
    for (unsigned long bits = start_bits; bits <= max_bits; bits *= 2) {
        std::optional<ConjugatePair> const c = solver.at(bits);
        if (!c)
            continue;
        if (auto r = attempt(*c, bits))
            return *r;
    }
    throw InvariantViolation("enclosure did not converge");
}

} // namespace

Interval ConjugatePair::separation(unsigned long bits) const
{
    if (kind == ConjugateKind::two_real)
        return abs(re1 - re2);
    (void)bits;
    return im1 * Interval(Rational(2));
}

Interval ConjugatePair::distance(int j, unsigned long bits) const
{
    Interval const & re = j == 1 ? re1 : re2;
    if (kind == ConjugateKind::two_real)
        return abs(alpha - re);
    Interval const & im = j == 1 ? im1 : im2;
    return sqrt(square(alpha - re) + square(im), bits);
}

ConjugatePair conjugates(AlgebraicNumber const & x, Rational const & precision)
{
    if (precision <= 0)
        throw DomainError("conjugates: precision must be positive");
    ConjugateSolver solver(x);
    return with_increasing_precision(solver, [&](ConjugatePair const & c, unsigned long) {
        bool const ok = c.re1.width() <= precision && c.re2.width() <= precision
                        && c.im1.width() <= precision && c.im2.width() <= precision;
        return ok ? std::optional<ConjugatePair>(c) : std::nullopt;
    });
}

ReducednessVerdict is_reduced(AlgebraicNumber const & x)
{
    require_cubic(x, "is_reduced");
    IntPolynomial const & f = x.minpoly();
    ReducednessVerdict v;
    v.alpha_minus_one = sign_at(x, IntPolynomial{-1, 1});
    if (discriminant(f) > 0) {
        v.method = ReducednessMethod::exact_totally_real;
        v.witness = static_cast<int>(sturm_count(f, Rational(-1), Rational(0)));
        v.reduced = v.alpha_minus_one > 0 && v.witness == 2;
    } else {
        /* |s + 1/2| < 1/2  <=>  s conj(s) + Re s < 0; with Vieta and
         * alpha > 0 this is (c3 alpha^2 + c2 alpha + 2 c0) / c3 > 0 */
        v.method = ReducednessMethod::exact_complex_case;
        IntPolynomial const h(std::vector<Integer>{2 * f.coeff(0), f.coeff(2), f.coeff(3)});
        v.witness = sign_at(x, h) * sgn(f.leading());
        v.reduced = v.alpha_minus_one > 0 && v.witness > 0;
    }
    return v;
}

OnsetReport reducedness_onset(Expansion const & e)
{
    require_cubic(e.origin(), "reducedness_onset");
    OnsetReport r;
    r.flags.reserve(e.depth() + 1);
    r.flags.push_back(is_reduced(e.origin()).reduced);
    for (auto const & s : e.steps())
        r.flags.push_back(is_reduced(s.tail()).reduced);
    for (std::size_t k = 1; k < r.flags.size(); ++k)
        if (r.flags[k - 1] && !r.flags[k])
            r.monotone = false;
    if (r.flags.back()) {
        std::size_t k = r.flags.size();
        while (k > 1 && r.flags[k - 2])
            --k;
        r.onset = k;
    }
    return r;
}

Interval beta_constant(AlgebraicNumber const & x, Rational const & precision)
{
    if (precision <= 0)
        throw DomainError("beta_constant: precision must be positive");
    ConjugateSolver solver(x);
    IntPolynomial const df = x.minpoly().derivative();
    Interval const c3(Rational(x.minpoly().leading()));
    return with_increasing_precision(solver, [&](ConjugatePair const & c, unsigned long bits) {
        Interval beta;
        if (c.kind == ConjugateKind::two_real) {
            beta = c.separation(bits) / (abs(c.alpha - c.re1) * abs(c.alpha - c.re2));
        } else {
            /* (alpha - s)(alpha - conj s) is the monic cofactor at alpha = f'(alpha)/c3 */
            Interval const cof = abs(eval(df, c.alpha) / c3);
            if (cof.contains_zero())
                return std::optional<Interval>();
            beta = c.separation(bits) / cof;
        }
        return beta.width() <= precision ? std::optional<Interval>(beta) : std::nullopt;
    });
}

std::vector<LimitSequenceRecord> limit_sequence(Expansion const & e, Rational const & precision)
{
    require_cubic(e.origin(), "limit_sequence");
    Interval const target = beta_constant(e.origin(), precision);
    std::vector<LimitSequenceRecord> out;
    out.reserve(e.depth());
    for (auto const & s : e.steps()) {
        ConjugateSolver solver(s.tail());
        Interval const q2(Rational(s.q * s.q));
        Interval const value = with_increasing_precision(solver, [&](ConjugatePair const & c,
                                                                     unsigned long bits) {
            Interval const v = q2 * c.separation(bits);
            return v.width() <= precision ? std::optional<Interval>(v) : std::nullopt;
        });
        out.push_back({s.n, value, target});
    }
    return out;
}

std::vector<AsymRecord> asym_sequence(Expansion const & e, Rational const & precision)
{
    require_cubic(e.origin(), "asym_sequence");
    Integer const D = abs(discriminant(e.origin().minpoly()));
    Interval const beta = beta_constant(e.origin(), precision / 1000);
    unsigned long const tb = 64 + 4 * mpz_sizeinbase(precision.get_den_mpz_t(), 2);
    Interval const target = sqrt(sqrt(Interval(Rational(D)), tb), tb) / sqrt(beta, tb);

    std::vector<AsymRecord> out;
    out.reserve(e.depth());
    for (auto const & s : e.steps()) {
        ConjugateSolver solver(s.tail());
        Interval const scale(make_rational(abs(s.C), s.q));
        Interval const C2(Rational(s.C * s.C));
        AsymRecord rec = with_increasing_precision(solver, [&](ConjugatePair const & c,
                                                               unsigned long bits) {
            Interval const d1 = c.distance(1, bits);
            Interval const d2 = c.distance(2, bits);
            AsymRecord r;
            r.n = s.n;
            r.ratio1 = d1 * scale;
            r.ratio2 = d2 * scale;
            r.product = C2 * d1 * d2 * c.separation(bits);
            bool const ok = r.ratio1.width() <= precision && r.ratio2.width() <= precision
                            && r.product.relative_width() <= precision;
            return ok ? std::optional<AsymRecord>(r) : std::nullopt;
        });
        rec.target = target;
        rec.product_matches_discriminant = square(rec.product).contains(Rational(D));
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<PisotRecord> pisot_scan(Expansion const & e)
{
    require_cubic(e.origin(), "pisot_scan");
    std::vector<PisotRecord> out;
    out.reserve(e.depth());
    for (auto const & s : e.steps()) {
        PisotRecord r;
        r.n = s.n;
        r.C = s.C;
        r.reduced = is_reduced(s.tail()).reduced;
        r.pisot = abs(s.C) == 1 && r.reduced;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace cubicf
