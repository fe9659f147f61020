#include <iostream>
#include <string>
#include <vector>

#include "lsing/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lsing::cli::run(args, std::cout, std::cerr);
}
