// One-shot generator for the bundled K_16 certificate: the classical
// finite-field construction. Vertices are the 16 elements of
// GF(16) = GF(2)[x]/(x^4 + x + 1); the cubes form an index-3 subgroup of
// the multiplicative group, and edge {u, v} is colored by the coset of
// u - v (= u XOR v in characteristic 2), i.e. by log(u ^ v) mod 3.
//
// Correctness does not rest on this construction: the coloring is checked
// triangle-by-triangle before being written, and consumers re-check it
// with verify_witness.

#include "ramsey/coloring.hpp"
#include "ramsey/witness_io.hpp"

#include <array>
#include <iostream>

namespace {

unsigned gf16_mul(unsigned a, unsigned b) {
    unsigned product = 0;
    while (b) {
        if (b & 1)
            product ^= a;
        b >>= 1;
        a <<= 1;
        if (a & 0x10)
            a ^= 0x13;  // reduce by x^4 + x + 1
    }
    return product;
}

}  // namespace

int main(int argc, char** argv) {
    std::array<unsigned, 16> log{};
    unsigned value = 1;
    for (unsigned i = 0; i < 15; ++i) {  // x generates the nonzero elements
        log[value] = i;
        value = gf16_mul(value, 2);
    }

    ramsey::EdgeColoring coloring(16, 3);
    for (unsigned j = 1; j < 16; ++j)
        for (unsigned i = 0; i < j; ++i)
            coloring.set_color(i, j, log[i ^ j] % 3);

    if (auto t = ramsey::find_mono_triangle(coloring)) {
        std::cerr << "construction failed: monochromatic triangle {" << t->a << ", " << t->b
                  << ", " << t->c << "}\n";
        return 1;
    }

    const char* path = argc > 1 ? argv[1] : "k16-3col.txt";
    ramsey::save_ramsey_witness(path, coloring);
    std::cout << "wrote " << path << " (120 edges, no monochromatic triangle)\n";
    return 0;
}
