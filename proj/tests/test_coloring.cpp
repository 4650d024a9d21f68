#include "ramsey/coloring.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace ramsey;

namespace {

// Color 0 carries the 5-cycle 0-1-2-3-4-0, color 1 its complement (also a
// 5-cycle): the classical triangle-free 2-coloring of K_5.
EdgeColoring double_c5() {
    EdgeColoring c(5, 2);
    for (unsigned v = 0; v < 5; ++v) {
        unsigned w = (v + 1) % 5;
        c.set_color(std::min(v, w), std::max(v, w), 0);
    }
    for (unsigned v = 0; v < 5; ++v) {
        unsigned w = (v + 2) % 5;
        c.set_color(std::min(v, w), std::max(v, w), 1);
    }
    return c;
}

}  // namespace

TEST_CASE("colex edge indexing makes K_m a prefix of K_{m+1}") {
    CHECK_EQ(EdgeColoring::edge_index(0, 1), 0);
    CHECK_EQ(EdgeColoring::edge_index(0, 2), 1);
    CHECK_EQ(EdgeColoring::edge_index(1, 2), 2);
    CHECK_EQ(EdgeColoring::edge_index(0, 3), 3);
    CHECK_EQ(EdgeColoring::edge_index(2, 3), 5);
    CHECK_EQ(EdgeColoring::edge_count(5), 10);
    CHECK_EQ(EdgeColoring::edge_count(16), 120);
    // every edge inside K_m precedes every edge reaching vertex m
    for (unsigned m = 2; m < 10; ++m)
        CHECK_EQ(EdgeColoring::edge_index(0, m), EdgeColoring::edge_count(m));
    CHECK_THROWS_AS((void)EdgeColoring::edge_index(2, 2), std::domain_error);
}

TEST_CASE("coloring stores and validates") {
    EdgeColoring c(4, 3);
    c.set_color(1, 3, 2);
    CHECK_EQ(c.color(1, 3), 2);
    CHECK_EQ(c.edge_count(), 6);
    CHECK_THROWS_AS(c.set_color(1, 3, 3), std::domain_error);
    CHECK_THROWS_AS(c.set_color(1, 4, 0), std::domain_error);
    CHECK_THROWS_AS(EdgeColoring(3, 0), std::domain_error);
}

TEST_CASE("monochromatic K_3 in one color") {
    EdgeColoring c(3, 1);
    auto t = find_mono_triangle(c);
    REQUIRE(t);
    CHECK_EQ(t->a, 0);
    CHECK_EQ(t->b, 1);
    CHECK_EQ(t->c, 2);
    CHECK_EQ(t->color, 0);
}

TEST_CASE("the double 5-cycle has no monochromatic triangle") {
    CHECK_FALSE(find_mono_triangle(double_c5()));
    CHECK(verify_witness(double_c5(), 2, 5));
}

TEST_CASE("K_2 has no triple at all") {
    CHECK_FALSE(find_mono_triangle(EdgeColoring(2, 3)));
}

TEST_CASE("the lexicographically smallest triangle is reported") {
    // all edges color 0 on K_4: four monochromatic triangles, (0,1,2) first
    EdgeColoring c(4, 2);
    auto t = find_mono_triangle(c);
    REQUIRE(t);
    CHECK_EQ(t->a, 0);
    CHECK_EQ(t->b, 1);
    CHECK_EQ(t->c, 2);

    // break (0,1,2) only: lexicographic successor (0,1,3) takes over
    c.set_color(1, 2, 1);
    t = find_mono_triangle(c);
    REQUIRE(t);
    CHECK_EQ(t->a, 0);
    CHECK_EQ(t->b, 1);
    CHECK_EQ(t->c, 3);
}

TEST_CASE("witness verification rejects wrong claims") {
    EdgeColoring c = double_c5();
    CHECK(verify_witness(c, 2, 5));
    CHECK_FALSE(verify_witness(c, 2, 6));  // wrong vertex count
    CHECK_FALSE(verify_witness(c, 1, 5));  // a color-1 edge exceeds n=1
    CHECK(verify_witness(c, 3, 5));        // "at most n colors" is satisfied

    EdgeColoring mono(3, 1);
    CHECK_FALSE(verify_witness(mono, 1, 3));
}
