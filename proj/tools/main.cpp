#include <iostream>
#include <string>
#include <vector>

#include "arithgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return arithgraph::cli::run(args, std::cout, std::cerr);
}
