#pragma once

/* Exact continued-fraction expansion of a real algebraic number.
 *
 * Indexing follows alpha = [a_1, ..., a_n, alpha_{n+1}]: step n extracts
 * a_n = floor(alpha_n) and produces the tail alpha_{n+1} together with its
 * minimal polynomial f_n. Convergents start from p_0 = 1, q_0 = 0 and
 * p_{-1} = 0, q_{-1} = 1.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "cubicf/bigpoly.hpp"
#include "cubicf/interval.hpp"
#include "cubicf/realroot.hpp"

namespace cubicf {

struct CFStep {
    std::size_t n = 0;
    Integer a;
    Integer p, q;
    Integer p_prev, q_prev;
    /// Minimal polynomial f_n of the tail alpha_{n+1}, normal form.
    IntPolynomial tail_poly;
    Rational tail_lo, tail_hi;
    /// (-1)^n q_n^m f_0(p_n/q_n); |C| is the leading coefficient of tail_poly.
    Integer C;
    /// Largest coefficient bit size of tail_poly.
    std::size_t bits = 0;
    /// The direct transform of f_0 was compared against tail_poly here.
    bool crosschecked = false;

    AlgebraicNumber tail() const;
    Unimodular2x2 gamma() const { return {p, p_prev, q, q_prev}; }
};

/// Purely periodic part detected for a quadratic input: a_{start + k} =
/// a_{start + k + length} for all k >= 0.
struct Period {
    std::size_t start = 0;
    std::size_t length = 0;
};

class Expansion {
public:
    Expansion(AlgebraicNumber origin, std::vector<CFStep> steps, std::optional<Period> period)
        : origin_(std::move(origin)), steps_(std::move(steps)), period_(period) {}

    AlgebraicNumber const & origin() const { return origin_; }
    std::vector<CFStep> const & steps() const { return steps_; }
    std::size_t depth() const { return steps_.size(); }
    CFStep const & step(std::size_t n) const { return steps_.at(n - 1); }
    /// alpha_k for k = 1 .. depth + 1.
    AlgebraicNumber tail(std::size_t k) const;
    std::vector<Integer> partial_quotients() const;
    std::optional<Period> const & period() const { return period_; }

private:
    AlgebraicNumber origin_;
    std::vector<CFStep> steps_;
    std::optional<Period> period_;
};

inline constexpr std::size_t max_expansion_depth = 10000;

struct ExpandOptions {
    /// Compare against the direct transform every this many steps; 0 picks
    /// the default: every step up to depth 100, every 10th step beyond.
    std::size_t crosscheck_every = 0;
};

/// Throws DomainError for rational input or depth outside [1, 10000].
/// Throws InvariantViolation if any exact per-step identity fails.
Expansion expand(AlgebraicNumber const & x, std::size_t depth, ExpandOptions const & opts = {});

/// f_n from f_0 in one shot: the normal form of
/// (q_n x + q_{n-1})^m f_0((p_n x + p_{n-1}) / (q_n x + q_{n-1})).
IntPolynomial direct_tail_poly(IntPolynomial const & f0, Unimodular2x2 const & gamma);
/// direct_tail_poly for a step of an expansion of x; throws
/// InvariantViolation if it differs from step.tail_poly.
IntPolynomial tail_poly_direct(AlgebraicNumber const & x, CFStep const & step);

struct ApproximationStat {
    std::size_t n = 0;
    /// Certified enclosure of q_n |q_n alpha - p_n|.
    Interval scaled_error;
    /// q_n^2 |f_0(p_n/q_n)|, exact.
    Rational thue_siegel;
};

/// Requires depth >= 2. Enclosures are narrowed to width <= precision.
std::vector<ApproximationStat> approximation_stats(Expansion const & e,
                                                   Rational const & precision = Rational(1, 1000000000000000));

/// Convergents skipped by lambda_estimate: the first ones sit far below
/// the liminf (q_2 |q_2 phi - p_2| = 0.38 for the golden ratio).
inline constexpr std::size_t lambda_burn_in = 10;

/// Running minimum of the q_n |q_n alpha - p_n| enclosures over
/// n > min(lambda_burn_in, depth / 2). A finite-depth estimate of the
/// liminf; antitone in depth once depth >= 2 lambda_burn_in. Requires
/// depth >= 5.
Interval lambda_estimate(Expansion const & e);

} // namespace cubicf
