#include <iostream>
#include <string>
#include <vector>

#include "grcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grcat::run(args, std::cout, std::cerr);
}
