#include <iostream>

#include "slie/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return slie::run(args, std::cout, std::cerr);
}
