#include <iostream>
#include <string>
#include <vector>

#include "qforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qforge::cli::dispatch(args, std::cout, std::cerr);
}
