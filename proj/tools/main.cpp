#include "cli.hpp"

int main(int argc, char** argv) { return trusslab::cli::run(argc, argv); }
