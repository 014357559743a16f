#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubicf/cli.hpp"
#include "cubicf/errors.hpp"

namespace {

using namespace cubicf;
using namespace cubicf::cli;

struct Flags {
    std::vector<std::string> polys;
    std::vector<std::size_t> roots;
    std::vector<std::string> intervals;
    std::size_t depth = 30;
    std::string precision = "1e-15";
    std::string format = "text";
    std::string out;
    std::size_t crosscheck_every = 0;
    std::size_t window = 5;
    std::string relate;
    std::vector<std::string> elem;
};

void add_common(CLI::App * sub, Flags & f, bool many_inputs)
{
    auto * poly = sub->add_option("--poly", f.polys, "integer polynomial in x, e.g. \"x^3 - 2\"")
                      ->required();
    auto * root = sub->add_option("--root", f.roots, "ascending real-root index, 1-based");
    auto * interval =
        sub->add_option("--interval", f.intervals, "isolating interval LO HI (rationals p/q)");
    if (!many_inputs) {
        poly->expected(1)->allow_extra_args(false);
        root->expected(1)->allow_extra_args(false);
        interval->expected(2)->allow_extra_args(false);
    } else {
        interval->expected(2, CLI::detail::expected_max_vector_size);
    }
    root->excludes(interval);
    interval->excludes(root);
    sub->add_option("--depth", f.depth, "number of partial quotients")
        ->envname("CUBICF_DEPTH")
        ->check(CLI::Range(std::size_t{1}, std::size_t{10000}));
    sub->add_option("--precision", f.precision, "enclosure width target, e.g. 1e-15 or 1/1000")
        ->envname("CUBICF_PRECISION");
    sub->add_option("--format", f.format, "json, csv or text")->envname("CUBICF_FORMAT");
    sub->add_option("--out", f.out, "write the report to this file");
    sub->add_option("--crosscheck-every", f.crosscheck_every,
                    "direct-transform cross-check cadence (0: default policy)");
}

// CLI11 silently skips environment values that fail validation.
void reject_bad_env(CLI::App const & sub)
{
    for (CLI::Option const * opt : sub.get_options()) {
        std::string const & name = opt->get_envname();
        if (name.empty() || opt->count() > 0)
            continue;
        if (char const * v = std::getenv(name.c_str()); v && *v)
            throw ParseError(name + ": invalid value '" + v + "'", 0);
    }
}

std::vector<InputSpec> inputs_of(Flags const & f)
{
    std::vector<InputSpec> in;
    for (auto const & p : f.polys)
        in.push_back({p, RootSelector::index(1)});
    if (!f.roots.empty()) {
        if (f.roots.size() != in.size())
            throw ParseError("give one --root per --poly", 0);
        for (std::size_t i = 0; i < in.size(); ++i)
            in[i].selector = RootSelector::index(f.roots[i]);
    }
    if (!f.intervals.empty()) {
        if (f.intervals.size() != 2 * in.size())
            throw ParseError("give one --interval LO HI per --poly", 0);
        for (std::size_t i = 0; i < in.size(); ++i)
            in[i].selector = RootSelector::interval(parse_rational(f.intervals[2 * i]),
                                                    parse_rational(f.intervals[2 * i + 1]));
    }
    return in;
}

RunConfig config_of(Flags const & f)
{
    RunConfig cfg;
    cfg.depth = f.depth;
    cfg.precision = parse_rational(f.precision);
    if (cfg.precision <= 0)
        throw ParseError("precision must be positive", 0);
    cfg.format = parse_format(f.format);
    cfg.crosscheck_every = f.crosscheck_every;
    cfg.window = f.window;
    if (!f.out.empty())
        cfg.out_path = f.out;
    return cfg;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Exact continued fractions of real algebraic numbers"};
    app.require_subcommand(1);
    Flags f;

    auto * expand_cmd = app.add_subcommand("expand", "expand a root into its continued fraction");
    add_common(expand_cmd, f, false);

    auto * verify_cmd = app.add_subcommand("verify", "check the cubic invariants along an expansion");
    add_common(verify_cmd, f, false);

    auto * express_cmd =
        app.add_subcommand("express", "write A0 + A1 b + A2 b^2 as (a b + b')/(c b + d)");
    add_common(express_cmd, f, false);
    express_cmd->add_option("elem", f.elem, "A0 A1 A2 (rationals)")->expected(3)->required();

    auto * stats_cmd = app.add_subcommand("stats", "partial-quotient statistics and Lambda estimates");
    add_common(stats_cmd, f, true);
    stats_cmd->add_option("--relate", f.relate,
                          "a,b,c,d with second = (a first + b)/(c first + d)");
    stats_cmd->add_option("--window", f.window, "quotient block length for tail matching")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int const rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_parse;
    }

    RunConfig cfg;
    std::vector<InputSpec> inputs;
    try {
        for (CLI::App const * sub : app.get_subcommands())
            reject_bad_env(*sub);
        cfg = config_of(f);
        inputs = inputs_of(f);
    } catch (cubicf::ParseError const & e) {
        std::cerr << "cubicf: parse error: " << e.what() << "\n";
        return exit_parse;
    }

    std::ofstream file;
    if (cfg.out_path) {
        file.open(*cfg.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cubicf: cannot open " << *cfg.out_path << "\n";
            return exit_parse;
        }
    }
    std::ostream & out = cfg.out_path ? static_cast<std::ostream &>(file) : std::cout;

    if (expand_cmd->parsed())
        return cmd_expand(cfg, inputs.front(), out, std::cerr);
    if (verify_cmd->parsed())
        return cmd_verify(cfg, inputs.front(), out, std::cerr);
    if (express_cmd->parsed())
        return cmd_express(inputs.front(), f.elem[0], f.elem[1], f.elem[2], cfg, out, std::cerr);
    std::optional<std::string> relate;
    if (!f.relate.empty())
        relate = f.relate;
    return cmd_stats(cfg, inputs, relate, out, std::cerr);
}
