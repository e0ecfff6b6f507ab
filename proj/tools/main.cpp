#include "asymptospec/cli.hpp"

int main(int argc, char** argv) {
  return asymptospec::cli::main_entry(argc, argv);
}
