#include "maskmat/cli.hpp"

int main(int argc, char** argv) { return maskmat::cli_main(argc, argv); }
