#include <iostream>

#include "sunit/cli.hpp"

int main(int argc, char** argv) {
  return sunit::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
