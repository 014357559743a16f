#pragma once

/* Conjugates of cubic irrationalities and the checks built on them:
 * reducedness, the conjugate-separation limit q_n^2 |s1 - s2| -> beta,
 * the tail asymptotics and Pisot events.
 *
 * Every enclosure is derived from exact data (isolated real roots, or the
 * trace and norm of the quadratic cofactor evaluated on alpha's isolating
 * interval), so the intervals are certified.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "cubicf/cfengine.hpp"
#include "cubicf/interval.hpp"
#include "cubicf/realroot.hpp"

namespace cubicf {

/// 10^-15
Rational default_precision();

enum class ConjugateKind { two_real, complex_pair };

struct ConjugatePair {
    ConjugateKind kind = ConjugateKind::two_real;
    /// sigma_j = re_j + i im_j. For a complex pair sigma_2 = conj(sigma_1)
    /// and im_1 > 0; for two real conjugates im_j = [0, 0] and re_1 < re_2.
    Interval re1, im1, re2, im2;
    /// Enclosure of alpha used to derive the conjugates.
    Interval alpha;

    /// Enclosure of |sigma_1 - sigma_2|.
    Interval separation(unsigned long bits) const;
    /// Enclosures of |alpha - sigma_j|.
    Interval distance(int j, unsigned long bits) const;
};

/// Throws CubicOnlyError unless deg x = 3. Each component enclosure has
/// width <= precision.
ConjugatePair conjugates(AlgebraicNumber const & x, Rational const & precision);

enum class ReducednessMethod { exact_totally_real, exact_complex_case };

struct ReducednessVerdict {
    bool reduced = false;
    ReducednessMethod method = ReducednessMethod::exact_totally_real;
    /// sign of alpha - 1
    int alpha_minus_one = 0;
    /// totally real: number of roots in (-1, 0); complex: sign of
    /// (c3 x^2 + c2 x + 2 c0) / c3 at alpha.
    int witness = 0;
};

/// Exact: alpha > 1 and both conjugates in the open disk |z + 1/2| < 1/2.
ReducednessVerdict is_reduced(AlgebraicNumber const & x);

struct OnsetReport {
    /// flags[k - 1] is the verdict for alpha_k, k = 1 .. depth + 1.
    std::vector<bool> flags;
    /// Least n0 with alpha_n reduced for all n0 <= n <= depth + 1.
    std::optional<std::size_t> onset;
    /// No reduced tail is followed by a non-reduced one.
    bool monotone = true;
};

OnsetReport reducedness_onset(Expansion const & e);

/// |(s1 - s2) / ((alpha - s1)(alpha - s2))|, width <= precision.
Interval beta_constant(AlgebraicNumber const & x, Rational const & precision);

struct LimitSequenceRecord {
    std::size_t n = 0;
    /// q_n^2 |s1(alpha_{n+1}) - s2(alpha_{n+1})|
    Interval value;
    Interval target;
};

std::vector<LimitSequenceRecord> limit_sequence(Expansion const & e, Rational const & precision);

struct AsymRecord {
    std::size_t n = 0;
    /// |alpha_{n+1} - s_j(alpha_{n+1})| * q_n^2 |f_0(p_n/q_n)|, j = 1, 2
    Interval ratio1, ratio2;
    Interval target;
    /// |C_n^2 (alpha - s1)(alpha - s2)(s1 - s2)| for the tail
    Interval product;
    /// product^2 encloses |D| exactly
    bool product_matches_discriminant = false;
};

/// Ratios and product are enclosed to absolute width <= precision (the
/// product to relative width <= precision).
std::vector<AsymRecord> asym_sequence(Expansion const & e, Rational const & precision);

struct PisotRecord {
    std::size_t n = 0;
    Integer C;
    bool reduced = false;
    bool pisot = false;
};

std::vector<PisotRecord> pisot_scan(Expansion const & e);

} // namespace cubicf
