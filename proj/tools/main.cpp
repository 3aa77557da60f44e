#include "cli.hpp"

int main(int argc, char** argv) { return cqg::cli::run(argc, argv); }
