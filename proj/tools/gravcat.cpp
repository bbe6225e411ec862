#include <iostream>
#include <string>
#include <vector>

#include "gravcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gravcat::cli::main_entry(args, std::cout, std::cerr);
}
