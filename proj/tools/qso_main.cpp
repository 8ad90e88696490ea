#include <cstdio>

#include "qso/qscalar.hpp"

int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    std::puts("qso: command-line interface under construction");
    return 64;
}
