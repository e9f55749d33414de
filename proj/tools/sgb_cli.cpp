#include <iostream>
#include <string>
#include <vector>

#include "sgb/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sgb::run_cli(args, std::cout, std::cerr);
}
