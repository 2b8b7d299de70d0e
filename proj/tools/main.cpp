#include "zetatrace/cli.hpp"

int main(int argc, char** argv) { return zetatrace::cli_main(argc, argv); }
