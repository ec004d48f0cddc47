#ifndef AEROPLAN_TOOLS_CLI_H
#define AEROPLAN_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace aeroplan {
namespace cli {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInfeasible = 3;

// Runs one command. args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace aeroplan

#endif
