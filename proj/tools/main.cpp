#include <iostream>

#include "porism/cli.hpp"

int main(int argc, char** argv) {
  return porism::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
