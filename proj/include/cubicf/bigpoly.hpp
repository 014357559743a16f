#pragma once

/* Exact scalars and univariate integer polynomials.
 *
 * Integer and Rational are GMP's C++ classes. Beware that arithmetic on
 * them produces expression templates: always bind results to an explicit
 * Integer/Rational, never to `auto`.
 *
 * Polynomials are stored constant term first. The normal form used for
 * every "minimal polynomial" in the library is primitive (content 1) with
 * a positive leading coefficient.
 */

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cubicf {

using Integer = mpz_class;
using Rational = mpq_class;

int sign(Integer const & v);
int sign(Rational const & v);
Integer floor_of(Rational const & r);
Integer ceil_of(Rational const & r);
Integer ipow(Integer const & base, unsigned long e);
Rational make_rational(Integer const & num, Integer const & den);
std::size_t bit_size(Integer const & v);

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(Integer const & c);
    /// c * x^k
    static IntPolynomial monomial(Integer const & c, int k);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Integer coeff(int i) const;
    Integer const & leading() const;
    std::span<Integer const> coeffs() const { return c_; }

    IntPolynomial derivative() const;
    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    Integer content() const;
    /// content 1 and positive leading coefficient.
    bool is_primitive() const;
    std::size_t max_coeff_bits() const;

    /// Human readable form, e.g. "x^3 + x^2 - 2x - 1". Re-parsable by
    /// cubicf::cli::parse_poly.
    std::string str() const;

    friend bool operator==(IntPolynomial const &, IntPolynomial const &) = default;

    friend IntPolynomial operator+(IntPolynomial const & a, IntPolynomial const & b);
    friend IntPolynomial operator-(IntPolynomial const & a, IntPolynomial const & b);
    friend IntPolynomial operator-(IntPolynomial const & a);
    friend IntPolynomial operator*(IntPolynomial const & a, IntPolynomial const & b);
    friend IntPolynomial operator*(Integer const & s, IntPolynomial const & a);

private:
    void trim();
    std::vector<Integer> c_;
};

/// 2x2 integer matrix acting by t -> (a t + b)/(c t + d).
struct Unimodular2x2 {
    Integer a{1}, b{0}, c{0}, d{1};

    Integer det() const;
    /// Throws DomainError unless |det| = 1.
    void check() const;
    Unimodular2x2 inverse() const;
    static Unimodular2x2 identity() { return {}; }
    /// (a 1; 1 0), one continued-fraction step.
    static Unimodular2x2 step(Integer const & partial_quotient);

    friend Unimodular2x2 operator*(Unimodular2x2 const & x, Unimodular2x2 const & y);
    friend bool operator==(Unimodular2x2 const &, Unimodular2x2 const &) = default;
};

/// q^deg(f) * f(p/q), an integer. For q > 0 its sign is the sign of f(p/q).
Integer eval_homogeneous(IntPolynomial const & f, Integer const & p, Integer const & q);
Rational eval_at_rational(IntPolynomial const & f, Rational const & r);
int sign_at_rational(IntPolynomial const & f, Rational const & r);

/// (c, g) with c > 0, f = +-c*g and g primitive with positive leading
/// coefficient. Throws DomainError on the zero polynomial.
std::pair<Integer, IntPolynomial> content_primitive(IntPolynomial const & f);
IntPolynomial primitive_part(IntPolynomial const & f);

/// lc(b)^(deg a - deg b + 1) * a  mod b, computed without fractions.
IntPolynomial pseudo_remainder(IntPolynomial const & a, IntPolynomial const & b);
/// a = q * b with q in Z[x]; throws DomainError if the division is not exact.
IntPolynomial exact_quotient(IntPolynomial const & a, IntPolynomial const & b);
/// A positive rational multiple of (h mod f), f != 0.
IntPolynomial reduce_mod(IntPolynomial const & h, IntPolynomial const & f);
/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(IntPolynomial const & a, IntPolynomial const & b);
bool is_squarefree(IntPolynomial const & f);
IntPolynomial squarefree_part(IntPolynomial const & f);

Integer resultant(IntPolynomial const & f, IntPolynomial const & g);
/// (-1)^(m(m-1)/2) res(f, f') / lc(f). Throws DomainError if deg f < 2.
Integer discriminant(IntPolynomial const & f);

/// (c x + d)^deg(f) f((a x + b)/(c x + d)), not normalized.
IntPolynomial moebius_substitute(IntPolynomial const & f, Integer const & a, Integer const & b,
                                 Integer const & c, Integer const & d);
/// Normalized substitution by a unimodular matrix. Roots of the result are
/// the g^-1 images of the roots of f. Throws DomainError if |det g| != 1 or
/// if the degree drops.
IntPolynomial unimodular_transform(IntPolynomial const & f, Unimodular2x2 const & g);

/* Sturm sequences and root isolation (sturm.cpp) */

using SturmSequence = std::vector<IntPolynomial>;

/// Requires f squarefree with deg f >= 1.
SturmSequence sturm_sequence(IntPolynomial const & f);
int sign_variations(SturmSequence const & seq, Rational const & x);
/// Number of distinct real roots in the open interval (lo, hi). Throws
/// DomainError if lo >= hi or either endpoint is a root of f.
std::size_t sturm_count(IntPolynomial const & f, Rational const & lo, Rational const & hi);
std::size_t sturm_count(SturmSequence const & seq, Rational const & lo, Rational const & hi);

struct IsolatedRoot {
    Rational lo, hi;
    /// set when the root was hit exactly during bisection.
    std::optional<Rational> exact;
};

/// Isolating intervals of all real roots of a squarefree f, ascending.
std::vector<IsolatedRoot> isolate_real_roots(IntPolynomial const & f);
/// Integer B with every root of f in (-B, B).
Integer root_bound(IntPolynomial const & f);

/// The rational with the smallest denominator in [lo, hi].
Rational simplest_rational_between(Rational const & lo, Rational const & hi);
/// All distinct rational roots of f, ascending.
std::vector<Rational> rational_roots(IntPolynomial const & f);

} // namespace cubicf
