#include "orbitile/cli.hpp"

int main(int argc, char** argv) { return orbitile::run_cli(argc, argv); }
