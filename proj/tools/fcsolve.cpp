#include <iostream>
#include <string>
#include <vector>

#include "forestcover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return forestcover::run_command(args, std::cout, std::cerr);
}
