#include "ringgate/cli.hpp"

int main(int argc, char** argv) { return ringgate::cli::run(argc, argv); }
