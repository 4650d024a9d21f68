#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

// An n-coloring of the edges of the complete graph K_N. Edges are stored
// in colex order — {i, j} with i < j lives at index j(j-1)/2 + i — so a
// coloring of K_m is a prefix of a coloring of K_{m+1}.
class EdgeColoring {
public:
    EdgeColoring(unsigned vertex_count, unsigned color_count);

    static std::size_t edge_index(unsigned i, unsigned j);
    static std::size_t edge_count(unsigned vertex_count) {
        return static_cast<std::size_t>(vertex_count) * (vertex_count - 1) / 2;
    }

    unsigned vertex_count() const { return vertex_count_; }
    unsigned color_count() const { return color_count_; }
    std::size_t edge_count() const { return colors_.size(); }

    unsigned color(unsigned i, unsigned j) const;
    void set_color(unsigned i, unsigned j, unsigned c);

    friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
        return a.vertex_count_ == b.vertex_count_ && a.color_count_ == b.color_count_ &&
               a.colors_ == b.colors_;
    }

private:
    unsigned vertex_count_;
    unsigned color_count_;
    std::vector<std::uint8_t> colors_;
};

// Three vertices a < b < c whose three mutual edges all carry `color`.
struct MonoTriangle {
    unsigned a = 0;
    unsigned b = 0;
    unsigned c = 0;
    unsigned color = 0;
};

// The lexicographically smallest (by vertex triple) monochromatic
// triangle, or absent when the coloring has none.
std::optional<MonoTriangle> find_mono_triangle(const EdgeColoring& c);

// True iff c colors K_{claimed_N} with colors drawn from [0, claimed_n)
// and contains no monochromatic triangle.
bool verify_witness(const EdgeColoring& c, unsigned claimed_n, unsigned claimed_N);

}  // namespace ramsey
