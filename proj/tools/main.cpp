#include <iostream>

#include "bft/cli.hpp"

int main(int argc, char** argv) {
  return bft::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                      std::cerr);
}
