#include "bior/cli.hpp"

int main(int argc, char** argv) { return bior::run_cli(argc, argv); }
