#include <iostream>

#include "twsparse/cli.hpp"

int main(int argc, char** argv) {
  return twsparse::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
