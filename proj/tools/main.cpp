#include "bforge/cli.hpp"

int main(int argc, char** argv) { return bforge::cli_run(argc, argv); }
