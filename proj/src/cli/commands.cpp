#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cubicf/cfengine.hpp"
#include "cubicf/cli.hpp"
#include "cubicf/conjlab.hpp"
#include "cubicf/errors.hpp"
#include "cubicf/fieldops.hpp"

namespace cubicf::cli {

using nlohmann::json;

namespace {

template <typename F>
int guarded(std::ostream & err, F && body)
{
    try {
        return body();
    } catch (ParseError const & e) {
        err << "cubicf: parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (RootSelectionError const & e) {
        err << "cubicf: root selection: " << e.what() << "\n";
        return exit_root_selection;
    } catch (ReducibleError const & e) {
        err << "cubicf: reducible input: " << e.what() << "\n";
        return exit_reducible;
    } catch (InvariantViolation const & e) {
        err << "cubicf: invariant violation: " << e.what() << "\n";
        return exit_invariant;
    } catch (DomainError const & e) {
        err << "cubicf: " << e.what() << "\n";
        return exit_parse;
    } catch (Error const & e) {
        err << "cubicf: " << e.what() << "\n";
        return exit_invariant;
    }
}

AlgebraicNumber load_irrational(InputSpec const & in)
{
    IntPolynomial const f = parse_poly(in.poly);
    return make_algebraic(f, in.selector, Rationality::require_irrational);
}

/* digits after the point for enclosures at the given precision */
int enclosure_digits(Rational const & precision)
{
    Integer const inv = floor_of(Rational(1 / precision));
    int const d = static_cast<int>(inv.get_str().size()) + 2;
    return std::clamp(d, 6, 80);
}

std::string str(Integer const & v) { return v.get_str(); }
std::string str(Rational const & v) { return v.get_str(); }

json poly_json(IntPolynomial const & f)
{
    json a = json::array();
    for (auto const & c : f.coeffs())
        a.push_back(c.get_str());
    return a;
}

json interval_json(Interval const & v, int digits)
{
    return json::array({v.lo_str(digits), v.hi_str(digits)});
}

json origin_json(AlgebraicNumber const & x)
{
    return {{"poly", poly_json(x.minpoly())},
            {"interval", json::array({str(x.lo()), str(x.hi())})}};
}

json step_json(CFStep const & s)
{
    return {{"n", s.n},
            {"a", str(s.a)},
            {"p", str(s.p)},
            {"q", str(s.q)},
            {"p_prev", str(s.p_prev)},
            {"q_prev", str(s.q_prev)},
            {"tail_poly", poly_json(s.tail_poly)},
            {"tail_interval", json::array({str(s.tail_lo), str(s.tail_hi)})},
            {"C", str(s.C)},
            {"bits", s.bits},
            {"crosschecked", s.crosschecked}};
}

/* RFC 4180: quote fields containing separators, quotes or line breaks */
std::string csv_field(std::string const & v)
{
    if (v.find_first_of(",\"\r\n") == std::string::npos)
        return v;
    std::string q = "\"";
    for (char c : v) {
        if (c == '"')
            q += "\"\"";
        else
            q += c;
    }
    return q + "\"";
}

void csv_row(std::ostream & out, std::vector<std::string> const & fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out << ',';
        out << csv_field(fields[i]);
    }
    out << "\r\n";
}

std::string coeff_list(IntPolynomial const & f)
{
    std::string s;
    for (auto const & c : f.coeffs()) {
        if (!s.empty())
            s += ",";
        s += c.get_str();
    }
    return s;
}

std::string quotient_list(Expansion const & e)
{
    std::string s;
    for (auto const & st : e.steps()) {
        if (!s.empty())
            s += ",";
        s += st.a.get_str();
    }
    return s;
}

ExpandOptions engine_options(RunConfig const & cfg)
{
    ExpandOptions o;
    o.crosscheck_every = cfg.crosscheck_every;
    return o;
}

} // namespace

int cmd_expand(RunConfig const & cfg, InputSpec const & in, std::ostream & out, std::ostream & err)
{
    return guarded(err, [&] {
        AlgebraicNumber const x = load_irrational(in);
        Expansion const e = expand(x, cfg.depth, engine_options(cfg));
        switch (cfg.format) {
        case Format::json: {
            json steps = json::array();
            for (auto const & s : e.steps())
                steps.push_back(step_json(s));
            json reports = {{"depth", e.depth()}, {"partial_quotients", quotient_list(e)}};
            if (e.period())
                reports["period"] = {{"start", e.period()->start}, {"length", e.period()->length}};
            json const doc = {{"origin", origin_json(x)}, {"steps", steps}, {"reports", reports}};
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::csv:
            csv_row(out, {"n", "a", "p", "q", "p_prev", "q_prev", "C", "bits", "crosschecked",
                          "tail_poly"});
            for (auto const & s : e.steps())
                csv_row(out, {std::to_string(s.n), str(s.a), str(s.p), str(s.q), str(s.p_prev),
                              str(s.q_prev), str(s.C), std::to_string(s.bits),
                              s.crosschecked ? "1" : "0", coeff_list(s.tail_poly)});
            break;
        case Format::text:
            out << "alpha: root of " << x.minpoly().str() << " in (" << x.lo() << ", " << x.hi()
                << ") ~ " << approximate(x, 20) << "\n";
            out << "partial quotients: [" << quotient_list(e) << "]\n";
            for (auto const & s : e.steps())
                out << "n=" << s.n << " a=" << s.a << " p/q=" << s.p << "/" << s.q
                    << " C=" << s.C << " bits=" << s.bits << " f_n=" << s.tail_poly.str() << "\n";
            if (e.period())
                out << "period: starts at a_" << e.period()->start << ", length "
                    << e.period()->length << "\n";
            break;
        }
        return static_cast<int>(exit_ok);
    });
}

int cmd_verify(RunConfig const & cfg, InputSpec const & in, std::ostream & out, std::ostream & err)
{
    return guarded(err, [&] {
        AlgebraicNumber const x = load_irrational(in);
        if (x.degree() != 3)
            throw CubicOnlyError("verify");
        Expansion const e = expand(x, cfg.depth, engine_options(cfg));
        Integer const D = discriminant(x.minpoly());
        OnsetReport const onset = reducedness_onset(e);
        std::vector<LimitSequenceRecord> const lim = limit_sequence(e, cfg.precision);
        std::vector<AsymRecord> const asym = asym_sequence(e, cfg.precision);
        std::vector<PisotRecord> const pis = pisot_scan(e);
        int const digits = enclosure_digits(cfg.precision);

        std::vector<Integer> discs;
        bool disc_ok = true;
        bool product_ok = true;
        for (std::size_t k = 0; k < e.depth(); ++k) {
            discs.push_back(discriminant(e.steps()[k].tail_poly));
            disc_ok = disc_ok && discs.back() == D;
            product_ok = product_ok && asym[k].product_matches_discriminant;
        }
        bool const ok = disc_ok && product_ok && onset.monotone;
        Interval const beta = lim.front().target;
        Interval const asym_target = asym.front().target;

        switch (cfg.format) {
        case Format::json: {
            json steps = json::array();
            for (std::size_t k = 0; k < e.depth(); ++k) {
                json s = step_json(e.steps()[k]);
                s["disc"] = str(discs[k]);
                s["reduced"] = static_cast<bool>(onset.flags[k + 1]);
                s["limit"] = interval_json(lim[k].value, digits);
                s["ratio1"] = interval_json(asym[k].ratio1, digits);
                s["ratio2"] = interval_json(asym[k].ratio2, digits);
                s["product"] = interval_json(asym[k].product, digits);
                s["pisot"] = pis[k].pisot;
                steps.push_back(std::move(s));
            }
            json pisot_hits = json::array();
            for (auto const & r : pis)
                if (r.pisot)
                    pisot_hits.push_back(r.n);
            json reports = {{"depth", e.depth()},
                            {"partial_quotients", quotient_list(e)},
                            {"discriminant", str(D)},
                            {"discriminant_constant", disc_ok},
                            {"origin_reduced", static_cast<bool>(onset.flags[0])},
                            {"onset", onset.onset ? json(*onset.onset) : json(nullptr)},
                            {"reduced_monotone", onset.monotone},
                            {"beta", interval_json(beta, digits)},
                            {"asym_target", interval_json(asym_target, digits)},
                            {"product_identity", product_ok},
                            {"pisot_steps", pisot_hits},
                            {"invariants_ok", ok}};
            json const doc = {{"origin", origin_json(x)}, {"steps", steps}, {"reports", reports}};
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::csv:
            csv_row(out, {"n", "a", "p", "q", "C", "bits", "disc", "reduced", "limit_lo",
                          "limit_hi", "ratio1_lo", "ratio1_hi", "ratio2_lo", "ratio2_hi",
                          "product_identity", "pisot"});
            for (std::size_t k = 0; k < e.depth(); ++k) {
                CFStep const & s = e.steps()[k];
                csv_row(out, {std::to_string(s.n), str(s.a), str(s.p), str(s.q), str(s.C),
                              std::to_string(s.bits), str(discs[k]),
                              onset.flags[k + 1] ? "1" : "0", lim[k].value.lo_str(digits),
                              lim[k].value.hi_str(digits), asym[k].ratio1.lo_str(digits),
                              asym[k].ratio1.hi_str(digits), asym[k].ratio2.lo_str(digits),
                              asym[k].ratio2.hi_str(digits),
                              asym[k].product_matches_discriminant ? "1" : "0",
                              pis[k].pisot ? "1" : "0"});
            }
            break;
        case Format::text:
            out << "alpha: root of " << x.minpoly().str() << " ~ " << approximate(x, 20) << "\n";
            out << "discriminant " << D << (disc_ok ? " (constant along the expansion)" : " (CHANGED)")
                << "\n";
            out << "reduced: alpha_1 " << (onset.flags[0] ? "yes" : "no") << ", onset "
                << (onset.onset ? std::to_string(*onset.onset) : std::string("not reached"))
                << (onset.monotone ? "" : ", NOT MONOTONE") << "\n";
            out << "beta in [" << beta.lo_str(digits) << ", " << beta.hi_str(digits) << "]\n";
            out << "|D|^(1/4)/beta^(1/2) in [" << asym_target.lo_str(digits) << ", "
                << asym_target.hi_str(digits) << "]\n";
            for (std::size_t k = 0; k < e.depth(); ++k) {
                CFStep const & s = e.steps()[k];
                out << "n=" << s.n << " a=" << s.a << " disc=" << discs[k]
                    << " reduced=" << (onset.flags[k + 1] ? 1 : 0) << " q^2|s1-s2|~"
                    << to_decimal(lim[k].value.midpoint(), 12) << " ratio~"
                    << to_decimal(asym[k].ratio1.midpoint(), 12) << " C=" << s.C
                    << (pis[k].pisot ? " PISOT" : "") << "\n";
            }
            out << (ok ? "all exact invariants hold\n" : "INVARIANT VIOLATION\n");
            break;
        }
        return static_cast<int>(ok ? exit_ok : exit_invariant);
    });
}

int cmd_express(InputSpec const & beta_in, std::string const & A0, std::string const & A1,
                std::string const & A2, RunConfig const & cfg, std::ostream & out,
                std::ostream & err)
{
    return guarded(err, [&] {
        AlgebraicNumber const beta = load_irrational(beta_in);
        FieldElement const elem{parse_rational(A0), parse_rational(A1), parse_rational(A2)};
        FracLinearRep const r = express(beta, elem);
        switch (cfg.format) {
        case Format::json: {
            json const doc = {{"a", str(r.a)}, {"b", str(r.b)}, {"c", str(r.c)},
                              {"d", str(r.d)}, {"det", str(r.det())}};
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::csv:
            csv_row(out, {"a", "b", "c", "d", "det"});
            csv_row(out, {str(r.a), str(r.b), str(r.c), str(r.d), str(r.det())});
            break;
        case Format::text:
            out << r.a << " " << r.b << " " << r.c << " " << r.d << "\n";
            out << "det " << r.det() << "\n";
            break;
        }
        return static_cast<int>(exit_ok);
    });
}

int cmd_stats(RunConfig const & cfg, std::vector<InputSpec> const & inputs,
              std::optional<std::string> const & relate, std::ostream & out, std::ostream & err)
{
    return guarded(err, [&] {
        if (inputs.empty())
            throw DomainError("stats needs at least one input");
        std::optional<FracLinearRep> rep;
        if (relate) {
            rep = parse_rep(*relate);
            if (inputs.size() != 2)
                throw DomainError("--relate needs exactly two inputs");
        }
        std::vector<Expansion> exps;
        for (auto const & in : inputs)
            exps.push_back(expand(load_irrational(in), cfg.depth, engine_options(cfg)));

        std::vector<BoundednessProfile> profiles;
        std::vector<Interval> lambdas;
        for (auto const & e : exps) {
            profiles.push_back(boundedness_profile(e));
            lambdas.push_back(lambda_estimate(e));
        }
        struct PairReport {
            std::size_t first, second;
            TailMatch match;
        };
        std::vector<PairReport> pairs;
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (std::size_t j = i + 1; j < exps.size(); ++j)
                pairs.push_back({i, j, tails_match(exps[i], exps[j], cfg.window)});
        /* the second input is (a x + b)/(c x + d) of the first */
        std::optional<LambdaTransferReport> transfer;
        if (rep)
            transfer = lambda_transfer_check(exps[1], exps[0], *rep);
        int const digits = enclosure_digits(cfg.precision);

        switch (cfg.format) {
        case Format::json: {
            json items = json::array();
            for (std::size_t i = 0; i < exps.size(); ++i) {
                json hist = json::object();
                for (auto const & [a, cnt] : profiles[i].histogram)
                    hist[a.get_str()] = cnt;
                items.push_back({{"origin", origin_json(exps[i].origin())},
                                 {"depth", exps[i].depth()},
                                 {"partial_quotients", quotient_list(exps[i])},
                                 {"max_quotient", str(profiles[i].max_quotient)},
                                 {"histogram", hist},
                                 {"thue_siegel_min", str(profiles[i].thue_siegel_min)},
                                 {"thue_siegel_argmin", profiles[i].thue_siegel_argmin},
                                 {"lambda", interval_json(lambdas[i], digits)}});
            }
            json pj = json::array();
            for (auto const & p : pairs)
                pj.push_back({{"inputs", json::array({p.first, p.second})},
                              {"window", p.match.window},
                              {"found", p.match.found},
                              {"offset", p.match.found ? json::array({p.match.i, p.match.j})
                                                       : json(nullptr)}});
            json doc = {{"inputs", items}, {"tail_matches", pj}};
            if (transfer)
                doc["lambda_transfer"] = {
                    {"det", str(transfer->det)},
                    {"lambda_alpha", interval_json(transfer->lambda_alpha, digits)},
                    {"lambda_beta", interval_json(transfer->lambda_beta, digits)},
                    {"beta_bound", transfer->beta_bound_consistent ? "consistent" : "violated"},
                    {"alpha_bound", transfer->alpha_bound_consistent ? "consistent" : "violated"},
                    {"estimates_overlap", transfer->estimates_overlap},
                    {"note", "finite-depth estimates; violations are suggestive only"}};
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::csv:
            csv_row(out, {"input", "poly", "depth", "max_quotient", "lambda_lo", "lambda_hi",
                          "thue_siegel_min", "thue_siegel_argmin"});
            for (std::size_t i = 0; i < exps.size(); ++i)
                csv_row(out, {std::to_string(i + 1), exps[i].origin().minpoly().str(),
                              std::to_string(exps[i].depth()), str(profiles[i].max_quotient),
                              lambdas[i].lo_str(digits), lambdas[i].hi_str(digits),
                              str(profiles[i].thue_siegel_min),
                              std::to_string(profiles[i].thue_siegel_argmin)});
            break;
        case Format::text:
            for (std::size_t i = 0; i < exps.size(); ++i) {
                out << "input " << i + 1 << ": root of " << exps[i].origin().minpoly().str()
                    << " ~ " << approximate(exps[i].origin(), 12) << "\n";
                out << "  max a_n = " << profiles[i].max_quotient << " over depth "
                    << exps[i].depth() << "\n";
                out << "  Lambda estimate in [" << lambdas[i].lo_str(digits) << ", "
                    << lambdas[i].hi_str(digits) << "]\n";
                out << "  min q^2|f0(p/q)| = " << profiles[i].thue_siegel_min << " at n = "
                    << profiles[i].thue_siegel_argmin << "\n";
            }
            for (auto const & p : pairs) {
                out << "tails " << p.first + 1 << "/" << p.second + 1 << ": ";
                if (p.match.found)
                    out << "alpha_" << p.match.i + 1 << " = alpha'_" << p.match.j + 1 << "\n";
                else
                    out << "no match within depth\n";
            }
            if (transfer)
                out << "Lambda transfer (|det| = " << Integer(::abs(transfer->det)) << "): "
                    << (transfer->beta_bound_consistent ? "consistent" : "violated") << " / "
                    << (transfer->alpha_bound_consistent ? "consistent" : "violated")
                    << " (finite-depth, suggestive only)\n";
            break;
        }
        return static_cast<int>(exit_ok);
    });
}

} // namespace cubicf::cli
