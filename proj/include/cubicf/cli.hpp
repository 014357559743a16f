#pragma once

/* Command-line front end. The subcommands live in the library so that the
 * test suite can run them in-process; tools/cubicf.cpp only wires flags. */

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubicf/bigpoly.hpp"
#include "cubicf/fieldops.hpp"
#include "cubicf/realroot.hpp"

namespace cubicf::cli {

/// Stable process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_invariant = 1,
    exit_parse = 2,
    exit_root_selection = 3,
    exit_reducible = 4,
};

/// poly := term (('+'|'-') term)* ; term := int | int? '*'? 'x' ('^' uint)?
/// Whitespace is ignored, a leading sign is allowed and repeated powers are
/// summed. Throws ParseError (with byte offset) on bad syntax or a zero
/// polynomial.
IntPolynomial parse_poly(std::string const & text);

/// "p/q", "-3", "1.25" or "1e-15".
Rational parse_rational(std::string const & text);

/// "a,b,c,d"
FracLinearRep parse_rep(std::string const & text);

enum class Format { json, csv, text };
Format parse_format(std::string const & text);

struct RunConfig {
    std::size_t depth = 30;
    Rational precision = Rational(1, 1000000000000000);
    Format format = Format::text;
    /// 0: engine default cadence
    std::size_t crosscheck_every = 0;
    std::optional<std::string> out_path;
    /// quotient block length for tail matching in `stats`
    std::size_t window = 5;
};

struct InputSpec {
    std::string poly;
    RootSelector selector = RootSelector::index(1);
};

/* Each command writes its report to `out` and diagnostics to `err`, and
 * returns an ExitCode. Library errors are mapped to exit codes here. */
int cmd_expand(RunConfig const & cfg, InputSpec const & in, std::ostream & out, std::ostream & err);
int cmd_verify(RunConfig const & cfg, InputSpec const & in, std::ostream & out, std::ostream & err);
int cmd_express(InputSpec const & beta, std::string const & A0, std::string const & A1,
                std::string const & A2, RunConfig const & cfg, std::ostream & out,
                std::ostream & err);
int cmd_stats(RunConfig const & cfg, std::vector<InputSpec> const & inputs,
              std::optional<std::string> const & relate, std::ostream & out, std::ostream & err);

} // namespace cubicf::cli
