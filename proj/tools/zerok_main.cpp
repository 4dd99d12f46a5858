#include "zerok/cli.hpp"

int main(int argc, char** argv) { return zerok::run_cli(argc, argv); }
