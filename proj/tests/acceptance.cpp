#include "dbr/fixtures.hpp"
int main() { return 0; }
