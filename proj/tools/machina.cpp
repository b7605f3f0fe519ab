#include <iostream>
#include <string>
#include <vector>

#include "machina/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return machina::cli::execute(args, std::cout, std::cerr);
}
