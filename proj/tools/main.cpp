#include <iostream>
#include <string>
#include <vector>

#include "inalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto outcome = inalg::cli::run(args, std::cin);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
