#include <iostream>

#include "frkt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return frkt::cli::run(args, std::cout, std::cerr);
}
