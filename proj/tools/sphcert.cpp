#include <iostream>
#include <string>
#include <vector>

#include "sphcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sphcert::cli::run(args, std::cout, std::cerr);
}
