#pragma once

/* A real algebraic number is a squarefree integer polynomial together
 * with an open rational interval that contains exactly one of its roots.
 * Values are immutable; refinement returns a new value. */

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <variant>

#include "cubicf/bigpoly.hpp"
#include "cubicf/interval.hpp"

namespace cubicf {

/// Picks one real root of a polynomial: either the k-th real root in
/// ascending order (1-based) or the unique root inside (lo, hi).
class RootSelector {
public:
    static RootSelector index(std::size_t k) { return RootSelector(k); }
    static RootSelector interval(Rational lo, Rational hi)
    {
        return RootSelector(std::make_pair(std::move(lo), std::move(hi)));
    }

    bool is_index() const { return std::holds_alternative<std::size_t>(v_); }
    std::size_t k() const { return std::get<std::size_t>(v_); }
    std::pair<Rational, Rational> const & bounds() const
    {
        return std::get<std::pair<Rational, Rational>>(v_);
    }

private:
    explicit RootSelector(std::variant<std::size_t, std::pair<Rational, Rational>> v)
        : v_(std::move(v)) {}
    std::variant<std::size_t, std::pair<Rational, Rational>> v_;
};

enum class Rationality { any, require_irrational };

class AlgebraicNumber {
public:
    /// Checked constructor: f is normalized to primitive form, must be
    /// squarefree, and (lo, hi) must isolate exactly one of its roots
    /// (InvariantViolation otherwise).
    static AlgebraicNumber from_isolating_interval(IntPolynomial const & f, Rational lo,
                                                   Rational hi, bool irreducible);
    static AlgebraicNumber from_rational(Rational const & r);

    IntPolynomial const & minpoly() const { return *f_; }
    int degree() const { return f_->degree(); }
    Rational const & lo() const { return lo_; }
    Rational const & hi() const { return hi_; }
    Rational width() const { return Rational(hi_ - lo_); }
    Interval enclosure() const { return {lo_, hi_}; }
    /// Irreducibility was proven (degree <= 3 inputs); for higher degrees
    /// only squarefreeness is known.
    bool irreducible() const { return irreducible_; }
    bool is_rational() const { return f_->degree() == 1; }
    /// Exact value; only for degree 1.
    Rational rational_value() const;

    /// One bisection step.
    AlgebraicNumber bisect() const;
    /// Same root with the interval narrowed to (lo', hi') ⊂ (lo, hi).
    /// Caller guarantees the root is inside; checked by signs.
    AlgebraicNumber with_interval(Rational lo, Rational hi) const;

private:
    AlgebraicNumber(std::shared_ptr<IntPolynomial const> f, Rational lo, Rational hi,
                    int sign_lo, bool irreducible)
        : f_(std::move(f)), lo_(std::move(lo)), hi_(std::move(hi)), sign_lo_(sign_lo),
          irreducible_(irreducible) {}

    std::shared_ptr<IntPolynomial const> f_;
    Rational lo_, hi_;
    int sign_lo_ = 0;
    bool irreducible_ = false;
};

/// Builds the selected root of f. For degree <= 3 the polynomial must be
/// irreducible over Q unless it has degree 1 (ReducibleError). A rational
/// root selected from a higher-degree polynomial is returned with its linear
/// minimal polynomial. Throws RootSelectionError for invalid selectors and
/// ReducibleError for non-squarefree input. An irrational result has its
/// interval inside [floor x, floor x + 1].
AlgebraicNumber make_algebraic(IntPolynomial const & f, RootSelector const & sel,
                               Rationality req = Rationality::any);

AlgebraicNumber refine(AlgebraicNumber const & x, Rational const & width_bound);

/// Exact sign of h(x).
int sign_at(AlgebraicNumber const & x, IntPolynomial const & h);

/// floor(x) together with the refined value used to determine it; the
/// returned interval lies within [m, m + 1].
std::pair<Integer, AlgebraicNumber> floor_refined(AlgebraicNumber const & x);
Integer floor_of(AlgebraicNumber const & x);

/// Correctly rounded (half away from zero) decimal with `digits` digits
/// after the point.
std::string approximate(AlgebraicNumber const & x, int digits);

/// True when both denote the same real number.
bool same_root(AlgebraicNumber const & x, AlgebraicNumber const & y);

} // namespace cubicf
