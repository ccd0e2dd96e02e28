#include <iostream>

#include "relcay/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return relcay::execute_command(args, std::cout, std::cerr);
}
