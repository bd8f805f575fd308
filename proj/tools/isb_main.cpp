#include <iostream>
#include <string>
#include <vector>

#include "isb/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return isb::cli::dispatch(args, std::cout, std::cerr);
}
