#include <iostream>

#include "hv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hv::run_cli(args, std::cout, std::cerr);
}
