#include "hullcode/cli.hpp"

int main(int argc, char** argv) { return hullcode::cli::run(argc, argv); }
