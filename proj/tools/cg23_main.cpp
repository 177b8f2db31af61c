#include "cg23/cli.hpp"

int main(int argc, char** argv) { return cg23::run(argc, argv); }
