#include <iostream>
#include <string>
#include <vector>

#include "kgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kgraph::cli::run(std::move(args), std::cout, std::cerr);
}
