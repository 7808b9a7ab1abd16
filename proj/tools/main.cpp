#include "commands.hpp"

int main(int argc, char** argv) { return tribodyn_cli::run(argc, argv); }
