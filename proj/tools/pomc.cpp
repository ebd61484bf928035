#include <iostream>
#include <string>
#include <vector>

#include "pomc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pomc::cli::run(std::move(args), std::cout, std::cerr);
}
