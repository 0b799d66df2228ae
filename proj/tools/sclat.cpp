#include "sclat/cli.hpp"

int main(int argc, char** argv) { return sclat::cli::run(argc, argv); }
