#include "golomb/cli.hpp"

int main(int argc, char** argv) { return golomb::run_cli(argc, argv); }
