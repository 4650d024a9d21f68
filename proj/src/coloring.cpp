#include "ramsey/coloring.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

EdgeColoring::EdgeColoring(unsigned vertex_count, unsigned color_count)
    : vertex_count_(vertex_count),
      color_count_(color_count),
      colors_(edge_count(vertex_count), 0) {
    if (color_count == 0 || color_count > 255)
        throw std::domain_error("EdgeColoring: color count must be in 1..255");
}

std::size_t EdgeColoring::edge_index(unsigned i, unsigned j) {
    if (i >= j)
        throw std::domain_error("EdgeColoring: edge requires i < j");
    return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
}

unsigned EdgeColoring::color(unsigned i, unsigned j) const {
    if (j >= vertex_count_)
        throw std::domain_error("EdgeColoring: vertex out of range");
    return colors_[edge_index(i, j)];
}

void EdgeColoring::set_color(unsigned i, unsigned j, unsigned c) {
    if (j >= vertex_count_)
        throw std::domain_error("EdgeColoring: vertex out of range");
    if (c >= color_count_)
        throw std::domain_error("EdgeColoring: color " + std::to_string(c) + " out of range");
    colors_[edge_index(i, j)] = static_cast<std::uint8_t>(c);
}

std::optional<MonoTriangle> find_mono_triangle(const EdgeColoring& c) {
    unsigned N = c.vertex_count();
    for (unsigned a = 0; a + 2 < N; ++a)
        for (unsigned b = a + 1; b + 1 < N; ++b) {
            unsigned ab = c.color(a, b);
            for (unsigned v = b + 1; v < N; ++v)
                if (c.color(a, v) == ab && c.color(b, v) == ab)
                    return MonoTriangle{a, b, v, ab};
        }
    return std::nullopt;
}

bool verify_witness(const EdgeColoring& c, unsigned claimed_n, unsigned claimed_N) {
    if (c.vertex_count() != claimed_N)
        return false;
    for (unsigned j = 1; j < claimed_N; ++j)
        for (unsigned i = 0; i < j; ++i)
            if (c.color(i, j) >= claimed_n)
                return false;
    return !find_mono_triangle(c).has_value();
}

}  // namespace ramsey
