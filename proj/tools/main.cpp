#include "hypfib/cli.hpp"

int main(int argc, char** argv) { return hypfib::Run(argc, argv); }
