#include <iostream>

#include "semlab/cli.hpp"

int main(int argc, char** argv) {
  return semlab::cli::run_cli(argc, argv, std::cout, std::cerr);
}
