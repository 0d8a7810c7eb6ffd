#include "nlops/cli.hpp"

int main(int argc, char** argv) { return nlops::run_cli(argc, argv); }
