#include "fhyper/cli.hpp"

int main(int argc, char** argv) { return fhyper::cli::run(argc, argv); }
