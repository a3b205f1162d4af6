#ifndef MEDIAN_TOOLS_CLI_HPP
#define MEDIAN_TOOLS_CLI_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace median::cli {

/// Exit codes: 0 success, 1 validation failure (bad graph, not median,
/// budget exceeded), 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "1e4..8e4" (doubling from the first bound up to the second) or a comma
/// separated list such as "1000,2000,5e3". Throws std::invalid_argument.
std::vector<std::size_t> parse_sizes(const std::string& text);

}  // namespace median::cli

#endif  // MEDIAN_TOOLS_CLI_HPP
