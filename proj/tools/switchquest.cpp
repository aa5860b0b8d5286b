#include <iostream>

#include "switchquest/cli.hpp"

int main(int argc, char** argv) {
  return switchquest::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
