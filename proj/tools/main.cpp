#include "cli.hpp"

int main(int argc, char** argv) { return prsim::cli::run_cli(argc, argv); }
