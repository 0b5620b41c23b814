#include <iostream>
#include <string>
#include <vector>

#include "pilab/commands.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return pilab::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
