#include <iostream>
#include <string>
#include <vector>

#include "lindblad/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return lindblad::cli::run(args, std::cout, std::cerr);
}
