#pragma once

/* Elements of a cubic field K = Q(beta) and their fractional-linear
 * representations (a beta + b)/(c beta + d), plus the empirical
 * bad-approximability tools built on them. */

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cubicf/cfengine.hpp"
#include "cubicf/realroot.hpp"

namespace cubicf {

/// A0 + A1 beta + A2 beta^2
struct FieldElement {
    Rational A0, A1, A2;
    bool is_rational() const { return A1 == 0 && A2 == 0; }
};

struct FracLinearRep {
    Integer a, b, c, d;
    Integer det() const { return Integer(a * d - b * c); }
    friend bool operator==(FracLinearRep const &, FracLinearRep const &) = default;
};

/// Solves the 3x4 homogeneous system for (a, b, c, d) with
/// (a beta + b)/(c beta + d) = elem. The solution is primitive with its
/// first nonzero entry positive; a rational element gives (0, num, 0, den).
/// Throws CubicOnlyError unless beta is an irreducible cubic.
FracLinearRep express(AlgebraicNumber const & beta, FieldElement const & elem);

/// (c X + d)(A0 + A1 X + A2 X^2) - (a X + b), denominators cleared, reduced
/// modulo the minimal polynomial of beta. Zero iff the representation holds.
IntPolynomial express_residue(AlgebraicNumber const & beta, FieldElement const & elem,
                              FracLinearRep const & rep);

/// elem as a real algebraic number (minimal polynomial through the
/// characteristic polynomial of multiplication by elem), with its interval
/// inside [floor, floor + 1]. Throws DomainError for rational elements.
AlgebraicNumber as_algebraic(AlgebraicNumber const & beta, FieldElement const & elem);

/// (a beta + b)/(c beta + d) as a real algebraic number; det must be nonzero.
AlgebraicNumber apply_rep(AlgebraicNumber const & beta, FracLinearRep const & rep);

struct TailMatch {
    bool found = false;
    /// alpha_{1+i} of the first expansion equals alpha_{1+j} of the second.
    std::size_t i = 0, j = 0;
    std::size_t window = 0;
};

/// Searches offsets with i + j increasing for equal blocks of `window`
/// partial quotients whose aligned tails are the same number (equal tail
/// polynomial and same root).
TailMatch tails_match(Expansion const & e1, Expansion const & e2, std::size_t window);

struct LambdaTransferReport {
    Interval lambda_alpha, lambda_beta;
    Integer det;
    /// Lambda(beta) <= |det| Lambda(alpha), consistent with the enclosures
    bool beta_bound_consistent = false;
    /// Lambda(alpha) <= |det| Lambda(beta)
    bool alpha_bound_consistent = false;
    bool estimates_overlap = false;
};

/// alpha = (a beta + b)/(c beta + d) must hold for the two origins
/// (DomainError otherwise). Estimates are finite-depth: a failed check is
/// suggestive only.
LambdaTransferReport lambda_transfer_check(Expansion const & e_alpha, Expansion const & e_beta,
                                           FracLinearRep const & rep);

struct BoundednessProfile {
    Integer max_quotient;
    std::vector<Integer> running_max;
    std::map<Integer, std::size_t> histogram;
    /// min over n of q_n^2 |f_0(p_n/q_n)| and where it is attained
    Rational thue_siegel_min;
    std::size_t thue_siegel_argmin = 0;
};

/// Requires depth >= 10.
BoundednessProfile boundedness_profile(Expansion const & e);

} // namespace cubicf
