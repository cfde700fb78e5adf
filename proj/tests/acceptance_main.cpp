// Acceptance suite: one PASS/FAIL line per criterion.

#include "ergodyn/acceptance.hpp"

#include <iostream>

int main() { return ergodyn::run_acceptance(std::cout) ? 0 : 1; }
