// Command-line front end. Exit codes are shared by every command:
// 0 pass, 1 mismatch or internal error, 2 usage error or cap refusal,
// 3 conjecture counterexample.

#ifndef PENTATAIL_CLI_HPP
#define PENTATAIL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace pentatail::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCounterexample = 3;

/// Rows of the bound table for the tabulated triples, as emitted by table2.
nlohmann::json table2_json();
/// The published table, in the same shape as table2_json().
nlohmann::json table2_golden();
/// One line per differing field; empty when the tables agree.
std::vector<std::string> table2_diff(const nlohmann::json& expected, const nlohmann::json& actual);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pentatail::cli

#endif  // PENTATAIL_CLI_HPP
