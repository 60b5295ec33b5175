#include "toruskit/cli.hpp"

int main(int argc, char** argv) { return toruskit::run_cli(argc, argv); }
