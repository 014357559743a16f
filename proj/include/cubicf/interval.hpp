#pragma once

/* Closed intervals with exact rational endpoints. Every operation returns
 * an enclosure of the exact image, so results are certified. */

#include <string>
#include <span>

#include "cubicf/bigpoly.hpp"

namespace cubicf {

class Interval {
public:
    Interval() = default;
    explicit Interval(Rational const & point) : lo_(point), hi_(point) {}
    /// Throws DomainError if lo > hi.
    Interval(Rational lo, Rational hi);

    Rational const & lo() const { return lo_; }
    Rational const & hi() const { return hi_; }
    Rational width() const { return Rational(hi_ - lo_); }
    Rational midpoint() const { return Rational((lo_ + hi_) / 2); }
    /// max(|lo|, |hi|)
    Rational magnitude() const;
    /// width / min(|lo|, |hi|); infinite-ish (returns width) when 0 is inside.
    Rational relative_width() const;

    bool contains(Rational const & x) const { return lo_ <= x && x <= hi_; }
    bool contains(Interval const & o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
    bool overlaps(Interval const & o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    bool positive() const { return lo_ > 0; }
    bool negative() const { return hi_ < 0; }

    /// Endpoints moved outward to multiples of 2^-bits.
    Interval rounded(unsigned long bits) const;

    friend Interval operator+(Interval const & a, Interval const & b);
    friend Interval operator-(Interval const & a, Interval const & b);
    friend Interval operator-(Interval const & a);
    friend Interval operator*(Interval const & a, Interval const & b);
    /// Throws DomainError if b contains zero.
    friend Interval operator/(Interval const & a, Interval const & b);
    friend bool operator==(Interval const &, Interval const &) = default;

    /// Decimal rendering of the endpoints, `digits` after the point, rounded
    /// outward.
    std::string lo_str(int digits) const;
    std::string hi_str(int digits) const;

private:
    Rational lo_{0}, hi_{0};
};

Interval abs(Interval const & x);
Interval square(Interval const & x);
/// Enclosure of sqrt(x) with endpoints on the 2^-bits grid. Requires x >= 0
/// (a lower endpoint below zero is clamped to zero).
Interval sqrt(Interval const & x, unsigned long bits);
Interval eval(IntPolynomial const & f, Interval const & x);
/// Rational coefficients, constant first.
Interval eval(std::span<Rational const> coeffs, Interval const & x);

/// Decimal rendering of r with `digits` after the point; `dir` < 0 rounds
/// down, > 0 rounds up, 0 rounds half away from zero.
std::string to_decimal(Rational const & r, int digits, int dir = 0);

} // namespace cubicf
