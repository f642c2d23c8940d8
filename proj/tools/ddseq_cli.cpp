#include <iostream>

#include "ddseq/commands.hpp"

int main(int argc, char** argv) {
  return ddseq::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
