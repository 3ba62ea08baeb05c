#include <iostream>

#include "weyl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return weyl::run_command(args, std::cout, std::cerr);
}
