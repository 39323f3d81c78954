#include <iostream>

#include "coxgrowth/cli.hpp"

int main(int argc, char** argv) {
  return coxgrowth::run_cli(argc, argv, std::cout, std::cerr);
}
