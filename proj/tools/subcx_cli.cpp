#include "subcx/cli.hpp"

int main(int argc, char** argv) {
  return subcx::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
