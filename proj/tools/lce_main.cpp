#include <iostream>
#include <string>
#include <vector>

#include "lce/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lce::cli::run(args, std::cout, std::cerr);
}
