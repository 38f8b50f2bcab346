#include "sl2hecke/cli.hpp"

int main(int argc, char** argv) { return sl2hecke::run_cli(argc, argv); }
