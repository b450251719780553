#include <iostream>

#include "ohg/cli.hpp"

int main(int argc, char** argv) {
  return ohg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
