#include <iostream>

#include "plie_cli/cli.hpp"

int main(int argc, char** argv) {
  return plie::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
