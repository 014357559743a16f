#include <algorithm>
#include <functional>

#include "cubicf/bigpoly.hpp"
#include "cubicf/errors.hpp"

namespace cubicf {

SturmSequence sturm_sequence(IntPolynomial const & f)
{
    if (f.degree() < 1)
        throw DomainError("Sturm sequence needs degree >= 1");
    SturmSequence seq;
    seq.push_back(f);
    seq.push_back(f.derivative());
    for (;;) {
        IntPolynomial const & a = seq[seq.size() - 2];
        IntPolynomial const & b = seq.back();
        if (b.degree() == 0)
            break;
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero())
            throw DomainError("Sturm sequence of a non-squarefree polynomial");
        /* r = lc(b)^k rem(a, b); we want a positive multiple of -rem(a, b) */
        int const k = a.degree() - b.degree() + 1;
        bool const flip = !(b.leading() < 0 && k % 2 == 1);
        if (flip)
            r = -r;
        Integer const c = r.content();
        std::vector<Integer> v(r.coeffs().begin(), r.coeffs().end());
        for (auto & x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        seq.emplace_back(std::move(v));
    }
    return seq;
}

int sign_variations(SturmSequence const & seq, Rational const & x)
{
    int count = 0;
    int last = 0;
    for (auto const & p : seq) {
        int const s = sign_at_rational(p, x);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

std::size_t sturm_count(SturmSequence const & seq, Rational const & lo, Rational const & hi)
{
    if (!(lo < hi))
        throw DomainError("sturm_count: empty interval");
    if (sign_at_rational(seq.front(), lo) == 0 || sign_at_rational(seq.front(), hi) == 0)
        throw DomainError("sturm_count: interval endpoint is a root");
    int const v = sign_variations(seq, lo) - sign_variations(seq, hi);
    if (v < 0)
        throw InvariantViolation("sturm_count: negative root count");
    return static_cast<std::size_t>(v);
}

std::size_t sturm_count(IntPolynomial const & f, Rational const & lo, Rational const & hi)
{
    return sturm_count(sturm_sequence(f), lo, hi);
}

Integer root_bound(IntPolynomial const & f)
{
    if (f.degree() < 1)
        throw DomainError("root_bound needs degree >= 1");
    /* Cauchy: |z| < 1 + max |c_i / c_m| */
    Integer const lc = abs(f.leading());
    Integer mx = 0;
    for (int i = 0; i < f.degree(); ++i)
        mx = std::max(mx, Integer(abs(f.coeff(i))));
    return Integer(ceil_of(make_rational(mx, lc)) + 2);
}

std::vector<IsolatedRoot> isolate_real_roots(IntPolynomial const & f)
{
    if (!is_squarefree(f))
        throw DomainError("isolate_real_roots needs a squarefree polynomial");
    if (f.degree() < 1)
        return {};
    SturmSequence const seq = sturm_sequence(f);
    Integer const B = root_bound(f);
    std::vector<IsolatedRoot> out;

    auto count = [&](Rational const & lo, Rational const & hi) {
        return sign_variations(seq, lo) - sign_variations(seq, hi);
    };

    std::function<void(Rational const &, Rational const &, int)> rec;
    rec = [&](Rational const & lo, Rational const & hi, int cnt) {
        if (cnt == 0)
            return;
        if (cnt == 1) {
            out.push_back({lo, hi, std::nullopt});
            return;
        }
        Rational const mid = (lo + hi) / 2;
        if (sign_at_rational(f, mid) != 0) {
            int const left = count(lo, mid);
            rec(lo, mid, left);
            rec(mid, hi, cnt - left);
            return;
        }
        /* mid is a rational root: isolate it in a small symmetric window */
        Rational delta = (hi - lo) / 4;
        for (;;) {
            Rational const l = mid - delta;
            Rational const h = mid + delta;
            if (sign_at_rational(f, l) != 0 && sign_at_rational(f, h) != 0 && count(l, h) == 1) {
                int const left = count(lo, l);
                int const right = count(h, hi);
                rec(lo, l, left);
                out.push_back({l, h, mid});
                rec(h, hi, right);
                return;
            }
            delta /= 2;
        }
    };

    Rational const lo(-B), hi(B);
    rec(lo, hi, count(lo, hi));
    return out;
}

Rational simplest_rational_between(Rational const & lo, Rational const & hi)
{
    if (hi < lo)
        throw DomainError("simplest_rational_between: empty interval");
    if (lo <= 0 && hi >= 0)
        return 0;
    if (hi < 0)
        return -simplest_rational_between(-hi, -lo);
    /* 0 < lo <= hi: continued-fraction descent */
    Integer const fl = floor_of(lo);
    if (fl == lo)
        return lo;
    if (Rational(fl + 1) <= hi)
        return Rational(fl + 1);
    /* lo, hi in (fl, fl + 1) */
    Rational const inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl));
    return Rational(fl + 1 / inner);
}

std::vector<Rational> rational_roots(IntPolynomial const & f)
{
    if (f.is_zero())
        throw DomainError("rational_roots of the zero polynomial");
    if (f.degree() < 1)
        return {};
    IntPolynomial const g = squarefree_part(f);
    if (g.degree() == 1)
        return {make_rational(-g.coeff(0), g.coeff(1))};
    /* A rational root p/q of g has q | lc(g). Two distinct such rationals
     * differ by at least 1/lc^2, so once an isolating interval is narrower
     * than that, its simplest rational is the only candidate. */
    Integer const L = abs(g.leading());
    Rational const target = make_rational(1, L * L + 1);
    std::vector<Rational> out;
    for (auto root : isolate_real_roots(g)) {
        if (root.exact) {
            out.push_back(*root.exact);
            continue;
        }
        int const slo = sign_at_rational(g, root.lo);
        while (root.hi - root.lo > target) {
            Rational const mid = (root.lo + root.hi) / 2;
            int const s = sign_at_rational(g, mid);
            if (s == 0) {
                root.lo = root.hi = mid;
                break;
            }
            if (s == slo)
                root.lo = mid;
            else
                root.hi = mid;
        }
        Rational const cand = simplest_rational_between(root.lo, root.hi);
        if (sign_at_rational(g, cand) == 0)
            out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cubicf
