#include "adsflat/cli.hpp"

int main(int argc, char** argv) { return adsflat::main_cli(argc, argv); }
