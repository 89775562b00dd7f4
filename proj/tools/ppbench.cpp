#include "ppbench/app/cli.hpp"

int main(int argc, char** argv) { return ppbench::app::cli_main(argc, argv); }
