#include <iostream>
#include <string>
#include <vector>

#include "qjt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qjt::cli::run(args, std::cout, std::cerr);
}
