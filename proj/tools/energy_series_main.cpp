#include <iostream>
#include <string>
#include <vector>

#include "energy_series/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return energy_series::cli::run(args, std::cout, std::cerr);
}
