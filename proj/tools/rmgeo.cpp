#include <iostream>

#include "rmgeo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rmgeo::cli::run(args, std::cout, std::cerr);
}
