#include <iostream>

#include "rooms/cli.hpp"

int main(int argc, char** argv) {
  return rooms::run_cli(argc, argv, std::cout, std::cerr);
}
