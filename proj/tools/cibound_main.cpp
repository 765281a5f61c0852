#include <iostream>

#include "cibound/cli.hpp"

int main(int argc, char** argv) {
  return cibound::cli::run_cli(argc, argv, std::cout, std::cerr);
}
