#include <iostream>

#include "grassmann/cli.hpp"

int main(int argc, char** argv) {
  return grassmann::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
