#include <iostream>

#include "ringsim/cli.hpp"

int main(int argc, char** argv) {
  return ringsim::run_cli(argc, argv, std::cout, std::cerr);
}
