#include <string>
#include <vector>

#include "scmsweep/cli.hpp"

int main(int argc, char** argv) {
  return scmsweep::cli_main(std::vector<std::string>(argv + 1, argv + argc));
}
