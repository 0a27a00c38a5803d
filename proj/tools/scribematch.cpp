#include "scribematch/cli.hpp"

int main(int argc, char** argv) { return scribematch::cli::run(argc, argv); }
