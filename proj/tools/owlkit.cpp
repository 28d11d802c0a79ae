#include <cstdlib>
#include <iostream>

#include "owlkit/cli.hpp"

int main(int argc, char** argv) {
  const char* prompts = std::getenv("OWLKIT_PROMPT_DIR");
  return owlkit::cli::run({argv + 1, argv + argc}, std::cout, std::cerr,
                          prompts != nullptr ? prompts
                                             : OWLKIT_DEFAULT_PROMPT_DIR);
}
