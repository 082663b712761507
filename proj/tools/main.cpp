#include <iostream>
#include <string>
#include <vector>

#include "experiments.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return radpoly::cli::run_cli(args, std::cout, std::cerr);
}
