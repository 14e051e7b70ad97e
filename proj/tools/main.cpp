#include "commands.hpp"

int main(int argc, char** argv) { return leemodel::cli::run(argc, argv); }
