#include <iostream>

#include "simcheck/cli/cli.hpp"

int main(int argc, char** argv) {
  return simcheck::cli::cli_main(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
