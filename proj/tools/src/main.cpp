#include "mapcount/cli.hpp"

int main(int argc, char** argv) { return mapcount::cli::run(argc, argv); }
