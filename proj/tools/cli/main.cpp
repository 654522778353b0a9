#include <iostream>
#include <string>
#include <vector>

#include "cli/job.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sumprod::cli::run_cli(args, std::cout, std::cerr);
}
