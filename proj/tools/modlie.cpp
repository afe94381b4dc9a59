#include <iostream>
#include <string>
#include <vector>

#include "modlie/cli.hpp"
#include "modlie_oracles.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  modlie::CliEnvironment env;
  env.embedded_oracles = std::string(modlie::kEmbeddedOracles);
  return modlie::run_cli(args, std::cin, std::cout, std::cerr, env);
}
