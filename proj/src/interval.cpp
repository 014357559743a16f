#include "cubicf/interval.hpp"

#include <algorithm>
#include <array>

#include "cubicf/errors.hpp"

namespace cubicf {

Interval::Interval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_)
        throw DomainError("interval with lo > hi");
}

Rational Interval::magnitude() const
{
    return std::max(Rational(::abs(lo_)), Rational(::abs(hi_)));
}

Rational Interval::relative_width() const
{
    if (contains_zero())
        return width();
    Rational const m = std::min(Rational(::abs(lo_)), Rational(::abs(hi_)));
    return Rational(width() / m);
}

Interval Interval::rounded(unsigned long bits) const
{
    Integer const scale = ipow(2, bits);
    Integer const l = floor_of(Rational(lo_ * scale));
    Integer const h = ceil_of(Rational(hi_ * scale));
    return {make_rational(l, scale), make_rational(h, scale)};
}

Interval operator+(Interval const & a, Interval const & b)
{
    return {Rational(a.lo_ + b.lo_), Rational(a.hi_ + b.hi_)};
}

Interval operator-(Interval const & a)
{
    return {Rational(-a.hi_), Rational(-a.lo_)};
}

Interval operator-(Interval const & a, Interval const & b)
{
    return {Rational(a.lo_ - b.hi_), Rational(a.hi_ - b.lo_)};
}

Interval operator*(Interval const & a, Interval const & b)
{
    if (a.lo_ >= 0 && b.lo_ >= 0)
        return {Rational(a.lo_ * b.lo_), Rational(a.hi_ * b.hi_)};
    std::array<Rational, 4> p{Rational(a.lo_ * b.lo_), Rational(a.lo_ * b.hi_),
                              Rational(a.hi_ * b.lo_), Rational(a.hi_ * b.hi_)};
    auto const [mn, mx] = std::minmax_element(p.begin(), p.end());
    return {*mn, *mx};
}

Interval operator/(Interval const & a, Interval const & b)
{
    if (b.contains_zero())
        throw DomainError("interval division by an interval containing zero");
    Interval const inv(Rational(1 / b.hi_), Rational(1 / b.lo_));
    return a * inv;
}

Interval abs(Interval const & x)
{
    if (x.lo() >= 0)
        return x;
    if (x.hi() <= 0)
        return -x;
    return {Rational(0), x.magnitude()};
}

Interval square(Interval const & x)
{
    Interval const a = abs(x);
    return {Rational(a.lo() * a.lo()), Rational(a.hi() * a.hi())};
}

Interval sqrt(Interval const & x, unsigned long bits)
{
    if (x.hi() < 0)
        throw DomainError("sqrt of a negative interval");
    Integer const scale = ipow(2, bits);
    Integer const scale2 = scale * scale;
    Integer l = 0;
    if (x.lo() > 0) {
        Integer const n = floor_of(Rational(x.lo() * scale2));
        mpz_sqrt(l.get_mpz_t(), n.get_mpz_t());
    }
    Integer const n = ceil_of(Rational(x.hi() * scale2));
    Integer h;
    mpz_sqrt(h.get_mpz_t(), n.get_mpz_t());
    if (h * h != n)
        h += 1;
    return {make_rational(l, scale), make_rational(h, scale)};
}

Interval eval(IntPolynomial const & f, Interval const & x)
{
    if (f.is_zero())
        return Interval(Rational(0));
    auto const c = f.coeffs();
    Interval acc(Rational(c.back()));
    for (int i = f.degree() - 1; i >= 0; --i)
        acc = acc * x + Interval(Rational(c[i]));
    return acc;
}

Interval eval(std::span<Rational const> coeffs, Interval const & x)
{
    if (coeffs.empty())
        return Interval(Rational(0));
    Interval acc(coeffs.back());
    for (std::size_t i = coeffs.size() - 1; i-- > 0;)
        acc = acc * x + Interval(coeffs[i]);
    return acc;
}

std::string to_decimal(Rational const & r, int digits, int dir)
{
    Integer const scale = ipow(10, static_cast<unsigned long>(digits));
    Rational const s = r * scale;
    Integer n;
    if (dir < 0) {
        n = floor_of(s);
    } else if (dir > 0) {
        n = ceil_of(s);
    } else {
        /* half away from zero */
        Rational const a = ::abs(s);
        n = floor_of(Rational(a + Rational(1, 2)));
        if (s < 0)
            n = -n;
    }
    bool const neg = n < 0;
    Integer const m = ::abs(n);
    std::string body = m.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (neg ? "-" : "") + body;
}

std::string Interval::lo_str(int digits) const { return to_decimal(lo_, digits, -1); }
std::string Interval::hi_str(int digits) const { return to_decimal(hi_, digits, +1); }

} // namespace cubicf
