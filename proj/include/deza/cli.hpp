#ifndef DEZA_CLI_HPP
#define DEZA_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "deza/analysis.hpp"

namespace deza::cli {

/// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1; ///< bad arguments or unparsable input
inline constexpr int exit_infeasible = 2;

enum class Format { json, graph6, table };

struct RunConfig
{
    std::string subcommand; ///< analyze | construct | enumerate | verify
    std::optional<std::string> input_path;
    std::optional<std::string> inline_graph6;
    std::optional<std::string> output; ///< file, or file prefix for enumerate
    std::optional<Format> format;      ///< absent: the subcommand's default
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> s;
    std::optional<int> t;
    std::optional<DezaParameters> params;
    int workers = 1;
    int max_order = 12;
};

/// Throws ArgumentError describing the first problem found.
void validate(const RunConfig& config);

/// Parses "n,k,b,a". Throws ArgumentError.
DezaParameters parse_parameters(const std::string& text);

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Validates and dispatches on config.subcommand.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: parse, validate, execute. The ceiling defaults to
/// DEZA_MAX_N when set.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace deza::cli

#endif // DEZA_CLI_HPP
