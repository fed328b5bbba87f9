/// @file rbdkit.cpp
/// Command-line entry point.
#include <iostream>
#include <string>
#include <vector>

#include "rbdkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rbdkit::cli::run(args, std::cout, std::cerr);
}
