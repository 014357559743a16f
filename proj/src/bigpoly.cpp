#include "cubicf/bigpoly.hpp"

#include <algorithm>
#include <sstream>

#include "cubicf/errors.hpp"

namespace cubicf {

int sign(Integer const & v) { return sgn(v); }
int sign(Rational const & v) { return sgn(v); }

Integer floor_of(Rational const & r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil_of(Rational const & r)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ipow(Integer const & base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational make_rational(Integer const & num, Integer const & den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::size_t bit_size(Integer const & v)
{
    return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

/* {{{ IntPolynomial */

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs)
    : c_(std::move(coeffs))
{
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    c_.reserve(coeffs.size());
    for (long v : coeffs)
        c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::constant(Integer const & c)
{
    return IntPolynomial(std::vector<Integer>{c});
}

IntPolynomial IntPolynomial::monomial(Integer const & c, int k)
{
    std::vector<Integer> v(static_cast<std::size_t>(k) + 1);
    v[k] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Integer IntPolynomial::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return c_[i];
}

Integer const & IntPolynomial::leading() const
{
    if (c_.empty())
        throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

IntPolynomial IntPolynomial::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const
{
    Integer g = 0;
    for (auto const & v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

bool IntPolynomial::is_primitive() const
{
    return !is_zero() && leading() > 0 && content() == 1;
}

std::size_t IntPolynomial::max_coeff_bits() const
{
    std::size_t b = 0;
    for (auto const & v : c_)
        b = std::max(b, bit_size(v));
    return b;
}

std::string IntPolynomial::str() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Integer const & v = c_[i];
        if (v == 0)
            continue;
        Integer mag = abs(v);
        if (first) {
            if (v < 0)
                os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1)
            os << mag;
        if (i >= 1)
            os << "x";
        if (i >= 2)
            os << "^" << i;
    }
    return os.str();
}

IntPolynomial operator+(IntPolynomial const & a, IntPolynomial const & b)
{
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        r[i] += b.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(IntPolynomial const & a)
{
    std::vector<Integer> r(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        r[i] = -a.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(IntPolynomial const & a, IntPolynomial const & b)
{
    return a + (-b);
}

IntPolynomial operator*(IntPolynomial const & a, IntPolynomial const & b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial operator*(Integer const & s, IntPolynomial const & a)
{
    std::vector<Integer> r(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        r[i] = s * a.c_[i];
    return IntPolynomial(std::move(r));
}

/* }}} */

/* {{{ Unimodular2x2 */

Integer Unimodular2x2::det() const
{
    return Integer(a * d - b * c);
}

void Unimodular2x2::check() const
{
    if (abs(det()) != 1)
        throw DomainError("matrix is not unimodular (|ad - bc| != 1)");
}

Unimodular2x2 Unimodular2x2::inverse() const
{
    check();
    Integer const e = det();
    return {e * d, -e * b, -e * c, e * a};
}

Unimodular2x2 Unimodular2x2::step(Integer const & partial_quotient)
{
    return {partial_quotient, 1, 1, 0};
}

Unimodular2x2 operator*(Unimodular2x2 const & x, Unimodular2x2 const & y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

/* }}} */

Integer eval_homogeneous(IntPolynomial const & f, Integer const & p, Integer const & q)
{
    /* Horner on the homogenized form: ((c_m p + c_{m-1} q) p + c_{m-2} q^2) ... */
    int const m = f.degree();
    if (m < 0)
        return 0;
    auto const c = f.coeffs();
    Integer acc = c[m];
    Integer qpow = 1;
    for (int i = m - 1; i >= 0; --i) {
        qpow *= q;
        acc *= p;
        mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), qpow.get_mpz_t());
    }
    return acc;
}

Rational eval_at_rational(IntPolynomial const & f, Rational const & r)
{
    if (f.is_zero())
        return 0;
    Integer const num = eval_homogeneous(f, r.get_num(), r.get_den());
    return make_rational(num, ipow(r.get_den(), static_cast<unsigned long>(f.degree())));
}

int sign_at_rational(IntPolynomial const & f, Rational const & r)
{
    return sign(eval_homogeneous(f, r.get_num(), r.get_den()));
}

std::pair<Integer, IntPolynomial> content_primitive(IntPolynomial const & f)
{
    if (f.is_zero())
        throw DomainError("content of the zero polynomial");
    Integer c = f.content();
    if (f.leading() < 0)
        c = -c;
    std::vector<Integer> g(f.coeffs().begin(), f.coeffs().end());
    for (auto & v : g)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    return {abs(c), IntPolynomial(std::move(g))};
}

IntPolynomial primitive_part(IntPolynomial const & f)
{
    return content_primitive(f).second;
}

IntPolynomial pseudo_remainder(IntPolynomial const & a, IntPolynomial const & b)
{
    if (b.is_zero())
        throw DomainError("pseudo-remainder by the zero polynomial");
    int const db = b.degree();
    if (a.degree() < db)
        return a;
    Integer const & lb = b.leading();
    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    int e = a.degree() - db + 1;
    int dr = a.degree();
    auto const bc = b.coeffs();
    while (dr >= db) {
        Integer const t = r[dr];
        int const k = dr - db;
        for (auto & v : r)
            v *= lb;
        for (int i = 0; i <= db; ++i)
            mpz_submul(r[i + k].get_mpz_t(), t.get_mpz_t(), bc[i].get_mpz_t());
        --e;
        /* r[dr] is now zero */
        --dr;
        while (dr >= 0 && r[dr] == 0)
            --dr;
    }
    if (e > 0) {
        Integer const s = ipow(lb, static_cast<unsigned long>(e));
        for (auto & v : r)
            v *= s;
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(IntPolynomial const & a, IntPolynomial const & b)
{
    if (b.is_zero())
        throw DomainError("division by the zero polynomial");
    if (a.is_zero())
        return {};
    int const db = b.degree();
    if (a.degree() < db)
        throw DomainError("inexact polynomial division");
    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db) + 1);
    auto const bc = b.coeffs();
    for (int k = a.degree() - db; k >= 0; --k) {
        Integer const & top = r[k + db];
        if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t()))
            throw DomainError("inexact polynomial division");
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
        for (int i = 0; i <= db; ++i)
            mpz_submul(r[i + k].get_mpz_t(), q[k].get_mpz_t(), bc[i].get_mpz_t());
    }
    for (auto const & v : r)
        if (v != 0)
            throw DomainError("inexact polynomial division");
    return IntPolynomial(std::move(q));
}

IntPolynomial reduce_mod(IntPolynomial const & h, IntPolynomial const & f)
{
    IntPolynomial r = pseudo_remainder(h, f);
    /* pseudo_remainder multiplies by an even or odd power of lc(f) */
    if (f.leading() < 0 && h.degree() >= f.degree() && (h.degree() - f.degree() + 1) % 2 == 1)
        r = -r;
    if (r.is_zero())
        return r;
    Integer const c = r.content();
    std::vector<Integer> v(r.coeffs().begin(), r.coeffs().end());
    for (auto & x : v)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPolynomial(std::move(v));
}

IntPolynomial gcd(IntPolynomial const & a, IntPolynomial const & b)
{
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd of two zero polynomials");
    if (a.is_zero())
        return primitive_part(b);
    if (b.is_zero())
        return primitive_part(a);
    IntPolynomial x = primitive_part(a);
    IntPolynomial y = primitive_part(b);
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0)
            return IntPolynomial{1};
        IntPolynomial r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.is_zero() ? IntPolynomial{} : primitive_part(r);
    }
    return primitive_part(x);
}

bool is_squarefree(IntPolynomial const & f)
{
    if (f.is_zero())
        return false;
    if (f.degree() <= 1)
        return true;
    return gcd(f, f.derivative()).degree() == 0;
}

IntPolynomial squarefree_part(IntPolynomial const & f)
{
    IntPolynomial const p = primitive_part(f);
    if (p.degree() <= 1)
        return p;
    IntPolynomial const g = gcd(p, p.derivative());
    return primitive_part(exact_quotient(p, g));
}

Integer resultant(IntPolynomial const & f, IntPolynomial const & g)
{
    if (f.is_zero() || g.is_zero())
        return 0;
    int const m = f.degree();
    int const n = g.degree();
    std::size_t const N = static_cast<std::size_t>(m + n);
    if (N == 0)
        return 1;
    /* Sylvester matrix, coefficients in descending order */
    std::vector<std::vector<Integer>> M(N, std::vector<Integer>(N));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            M[r][r + i] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            M[n + r][r + i] = g.coeff(n - i);

    /* fraction-free Gaussian elimination (Bareiss) */
    Integer prev = 1;
    int s = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (M[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < N && M[piv][k] == 0)
                ++piv;
            if (piv == N)
                return 0;
            std::swap(M[k], M[piv]);
            s = -s;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j) {
                Integer t = M[i][j] * M[k][k];
                mpz_submul(t.get_mpz_t(), M[i][k].get_mpz_t(), M[k][j].get_mpz_t());
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return s * M[N - 1][N - 1];
}

Integer discriminant(IntPolynomial const & f)
{
    int const m = f.degree();
    if (m < 2)
        throw DomainError("discriminant needs degree >= 2");
    Integer r = resultant(f, f.derivative());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if ((m * (m - 1) / 2) % 2 == 1)
        r = -r;
    return r;
}

IntPolynomial moebius_substitute(IntPolynomial const & f, Integer const & a, Integer const & b,
                                 Integer const & c, Integer const & d)
{
    int const m = f.degree();
    if (m < 0)
        return {};
    /* sum_i f_i (ax+b)^i (cx+d)^(m-i) */
    IntPolynomial const lin_num(std::vector<Integer>{b, a});
    IntPolynomial const lin_den(std::vector<Integer>{d, c});
    std::vector<IntPolynomial> num_pow(static_cast<std::size_t>(m) + 1);
    std::vector<IntPolynomial> den_pow(static_cast<std::size_t>(m) + 1);
    num_pow[0] = IntPolynomial{1};
    den_pow[0] = IntPolynomial{1};
    for (int i = 1; i <= m; ++i) {
        num_pow[i] = num_pow[i - 1] * lin_num;
        den_pow[i] = den_pow[i - 1] * lin_den;
    }
    IntPolynomial acc;
    auto const fc = f.coeffs();
    for (int i = 0; i <= m; ++i) {
        if (fc[i] == 0)
            continue;
        acc = acc + fc[i] * (num_pow[i] * den_pow[m - i]);
    }
    return acc;
}

IntPolynomial unimodular_transform(IntPolynomial const & f, Unimodular2x2 const & g)
{
    g.check();
    if (f.degree() < 1)
        throw DomainError("unimodular_transform needs degree >= 1");
    IntPolynomial const r = moebius_substitute(f, g.a, g.b, g.c, g.d);
    if (r.degree() != f.degree())
        throw DomainError("unimodular_transform: degree drop (root at the pole of the transform)");
    return primitive_part(r);
}

} // namespace cubicf
