#include <iostream>
#include <string>
#include <vector>

#include "smallcox/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return smallcox::dispatch(args, std::cout, std::cerr);
}
