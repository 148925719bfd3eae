#ifndef TIMEPRICE_CLI_HPP
#define TIMEPRICE_CLI_HPP

#include <string>
#include <vector>

namespace timeprice {

// Exit codes: 0 success, 2 validation/parse error, 3 solver/oracle
// divergence, 4 numeric failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitDivergence = 3;
inline constexpr int kExitNumeric = 4;

// Entry point shared by the pricing binary and the test suite.
int run_cli(const std::vector<std::string>& args);

}  // namespace timeprice

#endif  // TIMEPRICE_CLI_HPP
