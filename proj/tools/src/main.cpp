#include <iostream>

#include "singk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return singk::cli::run(args, std::cout, std::cerr);
}
