#include <iostream>

#include "retractkit/cli.hpp"

int main(int argc, char** argv) {
  const auto result = retractkit::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  (result.usage_error ? std::cerr : std::cout) << result.render();
  return result.exit_code();
}
