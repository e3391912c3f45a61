#include <iostream>

#include "hemi/cli.hpp"

int main(int argc, char** argv) {
  return hemi::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
