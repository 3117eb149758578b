#include "skw/cli.hpp"

int main(int argc, char** argv) { return skw::cli::run_cli(argc, argv); }
