#include <iostream>
#include <string>
#include <vector>

#include "rh4/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rh4::cli::run(std::move(args), std::cout, std::cerr);
}
