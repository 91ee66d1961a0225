#include "ksbound/cli.hpp"

int main(int argc, char** argv) { return ksb::run(argc, argv); }
