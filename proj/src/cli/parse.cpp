#include <cctype>
#include <map>

#include "cubicf/cli.hpp"
#include "cubicf/errors.hpp"

namespace cubicf::cli {

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string const & s) : s_(s) {}

    IntPolynomial run()
    {
        skip_ws();
        if (at_end())
            throw ParseError("empty polynomial", pos_);
        int sgn = 1;
        if (peek() == '+' || peek() == '-') {
            sgn = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        term(sgn);
        for (;;) {
            skip_ws();
            if (at_end())
                break;
            char const c = peek();
            if (c != '+' && c != '-')
                throw ParseError(std::string("expected '+' or '-', got '") + c + "'", pos_);
            ++pos_;
            term(c == '-' ? -1 : 1);
        }
        int deg = -1;
        for (auto const & [k, v] : acc_)
            if (v != 0)
                deg = std::max(deg, static_cast<int>(k));
        if (deg < 0)
            throw ParseError("zero polynomial", 0);
        std::vector<Integer> coeffs(static_cast<std::size_t>(deg) + 1);
        for (auto const & [k, v] : acc_)
            if (static_cast<int>(k) <= deg)
                coeffs[k] = v;
        return IntPolynomial(std::move(coeffs));
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    std::optional<Integer> number()
    {
        skip_ws();
        std::size_t const start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start)
            return std::nullopt;
        return Integer(s_.substr(start, pos_ - start));
    }

    void term(int sgn)
    {
        skip_ws();
        std::size_t const start = pos_;
        std::optional<Integer> coef = number();
        skip_ws();
        bool star = false;
        if (!at_end() && peek() == '*') {
            if (!coef)
                throw ParseError("'*' without a coefficient", pos_);
            star = true;
            ++pos_;
            skip_ws();
        }
        std::size_t power = 0;
        if (!at_end() && peek() == 'x') {
            ++pos_;
            power = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                std::size_t const at = pos_;
                std::optional<Integer> e = number();
                if (!e)
                    throw ParseError("expected exponent after '^'", at);
                if (!e->fits_ulong_p() || *e > 100000)
                    throw ParseError("exponent too large", at);
                power = e->get_ui();
            }
        } else if (star) {
            throw ParseError("expected 'x' after '*'", pos_);
        } else if (!coef) {
            throw ParseError("expected a term", at_end() ? s_.size() : start);
        }
        Integer const c = coef ? *coef : Integer(1);
        acc_[power] += sgn * c;
    }

    std::string const & s_;
    std::size_t pos_ = 0;
    std::map<std::size_t, Integer> acc_;
};

} // namespace

IntPolynomial parse_poly(std::string const & text)
{
    return PolyParser(text).run();
}

Rational parse_rational(std::string const & text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw ParseError("empty number", 0);
    auto bad = [&](std::size_t at) { return ParseError("malformed number '" + text + "'", at); };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational const num = parse_rational(s.substr(0, slash));
        Rational const den = parse_rational(s.substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator", slash + 1);
        return Rational(num / den);
    }
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac = 0;
    bool seen_dot = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot)
                throw bad(i);
            seen_dot = true;
            continue;
        }
        digits.push_back(s[i]);
        if (seen_dot)
            ++frac;
    }
    if (digits.empty())
        throw bad(i);
    long exp = 0;
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E')
            throw bad(i);
        ++i;
        std::size_t const at = i;
        try {
            std::size_t used = 0;
            exp = std::stol(s.substr(i), &used);
            i += used;
        } catch (std::exception const &) {
            throw bad(at);
        }
        if (i != s.size() || exp > 10000 || exp < -10000)
            throw bad(at);
    }
    Rational r{Integer(digits)};
    long const shift = exp - frac;
    if (shift >= 0)
        r *= ipow(10, static_cast<unsigned long>(shift));
    else
        r /= ipow(10, static_cast<unsigned long>(-shift));
    return neg ? Rational(-r) : r;
}

FracLinearRep parse_rep(std::string const & text)
{
    std::vector<Integer> v;
    std::size_t start = 0;
    for (;;) {
        std::size_t const comma = text.find(',', start);
        std::string const part = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                               : comma - start);
        Rational const r = parse_rational(part);
        if (r.get_den() != 1)
            throw ParseError("representation entries must be integers", start);
        v.push_back(r.get_num());
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (v.size() != 4)
        throw ParseError("expected four comma-separated integers a,b,c,d", 0);
    return {v[0], v[1], v[2], v[3]};
}

Format parse_format(std::string const & text)
{
    if (text == "json")
        return Format::json;
    if (text == "csv")
        return Format::csv;
    if (text == "text")
        return Format::text;
    throw ParseError("unknown format '" + text + "' (json, csv, text)", 0);
}

} // namespace cubicf::cli
