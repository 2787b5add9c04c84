#include "fmhd/runner.hpp"

int main(int argc, char** argv) { return fmhd::run_cli(argc, argv); }
