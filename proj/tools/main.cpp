#include <iostream>
#include <vector>

#include "uqsl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return uqsl::run_cli(std::move(args), std::cout, std::cerr);
}
