#include <iostream>
#include <string>
#include <vector>

#include "mpqp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mpqp::run_cli(args, std::cout, std::cerr);
}
