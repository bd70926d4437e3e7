#include "spinboson/cli.hpp"

int main(int argc, char** argv) { return spinboson::cli_main(argc, argv); }
