#include "z2k/cli.hpp"

int main(int argc, char **argv) { return z2k::cli::main_entry(argc, argv); }
