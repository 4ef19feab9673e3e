#include "gel/cli.hpp"

int main(int argc, char** argv) { return gel::run_cli(argc, argv); }
