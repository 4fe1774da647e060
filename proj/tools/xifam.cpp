#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "xifam/cli.hpp"

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  std::vector<std::string> args(argv, argv + argc);
  return xifam::cli::run(args, std::cout, std::cerr);
}
