#include <iostream>

#include "liefix/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  liefix::cli::Output o = liefix::cli::run(args);
  std::cout << o.out << std::flush;
  std::cerr << o.err << std::flush;
  return o.exit_code;
}
