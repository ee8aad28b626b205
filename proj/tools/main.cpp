#include <iostream>
#include <string>
#include <vector>

#include "satip_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return satip::cli::run(args, std::cout, std::cerr);
}
