#include "ychg/cli.hpp"

int main(int argc, char** argv) { return ychg::run_cli(argc, argv); }
