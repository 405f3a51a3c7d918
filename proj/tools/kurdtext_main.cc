#include <iostream>

#include "kurdtext/cli.h"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return kurdtext::cli::Main(argc, argv, std::cin, std::cout, std::cerr);
}
