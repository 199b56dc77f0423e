#include "cli.hpp"

int main(int argc, char** argv) { return edalab::cli::run_main(argc, argv); }
