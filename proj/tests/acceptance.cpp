#include <iostream>

#include "tridess/selftest.hpp"

int main() { return tridess::run_acceptance(std::cout) == 0 ? 0 : 1; }
