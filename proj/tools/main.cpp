#include "zsep/cli.hpp"

int main(int argc, char** argv) { return zsep::cli::run_main(argc, argv); }
