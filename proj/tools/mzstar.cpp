#include <iostream>
#include <string>
#include <vector>

#include "mzstar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mzstar::run_cli(args, std::cout, std::cerr);
}
