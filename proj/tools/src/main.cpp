#include <iostream>
#include <string>
#include <vector>

#include "exactkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return exactkit::cli::dispatch(args, std::cout, std::cerr, std::cin);
}
