#include <iostream>
#include <string>
#include <vector>

#include "monosimplex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return monosimplex::cli::run(args, std::cout, std::cerr);
}
