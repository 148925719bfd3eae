#include <string>
#include <vector>

#include "timeprice/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return timeprice::run_cli(args);
}
