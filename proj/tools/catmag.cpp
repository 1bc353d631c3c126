#include <iostream>
#include <string>
#include <vector>

#include "catmag/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return catmag::cli::run(args, std::cout, std::cerr);
}
