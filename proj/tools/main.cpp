#include "cli.hpp"

int main(int argc, char** argv) { return dirstock::cli::run(argc, argv); }
