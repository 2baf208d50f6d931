// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return hyperturan::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
