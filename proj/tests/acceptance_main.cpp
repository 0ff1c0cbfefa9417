#include <fitcq/model.hpp>
#include <cstdio>
int main(){ std::puts("placeholder"); return 1; }
