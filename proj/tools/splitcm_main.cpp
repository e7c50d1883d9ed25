#include <iostream>
#include <string>
#include <vector>

#include "splitcm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return splitcm::run_cli(args, std::cout, std::cerr);
}
