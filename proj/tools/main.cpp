#include <vector>
#include <string>

#include "drp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return drp::cli::run_cli(args);
}
