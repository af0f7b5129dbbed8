#include <iostream>

#include "nquandle/cli.hpp"

int main(int argc, char** argv) {
  return nquandle::run_cli(argc, argv, std::cout, std::cerr);
}
