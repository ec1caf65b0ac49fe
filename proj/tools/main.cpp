#include "positroid/cli.hpp"

int main(int argc, char** argv) { return positroid::run_cli(argc, argv); }
