#pragma once

// Grid view of the star product K_{1,m} x K_{1,n}.
//
// The hub is the product of the two centers, Row(i) pairs leaf i of the first
// star with the second center, Col(j) pairs the first center with leaf j of
// the second star, and Cell(i,j) pairs the two leaves. Indices are 1-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace starprod {

enum class VertexKind : std::uint8_t { Hub = 0, Row = 1, Col = 2, Cell = 3 };

struct Vertex {
    VertexKind kind = VertexKind::Hub;
    int i = 0;  // row index, 0 unless Row or Cell
    int j = 0;  // column index, 0 unless Col or Cell

    static constexpr Vertex hub() { return {VertexKind::Hub, 0, 0}; }
    static constexpr Vertex row(int i) { return {VertexKind::Row, i, 0}; }
    static constexpr Vertex col(int j) { return {VertexKind::Col, 0, j}; }
    static constexpr Vertex cell(int i, int j) { return {VertexKind::Cell, i, j}; }

    constexpr bool is_hub() const { return kind == VertexKind::Hub; }
    constexpr bool is_row() const { return kind == VertexKind::Row; }
    constexpr bool is_col() const { return kind == VertexKind::Col; }
    constexpr bool is_cell() const { return kind == VertexKind::Cell; }

    // Lexicographic on (kind, i, j); this coincides with canonical order.
    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Hub <-> Hub, Row i <-> Col i, Cell(i,j) <-> Cell(j,i).
constexpr Vertex transpose(Vertex v) {
    switch (v.kind) {
        case VertexKind::Row: return Vertex::col(v.i);
        case VertexKind::Col: return Vertex::row(v.j);
        case VertexKind::Cell: return Vertex::cell(v.j, v.i);
        default: return v;
    }
}

// Text encoding: "hub", "r<i>", "c<j>", "a<i>,<j>".
std::string to_string(const Vertex& v);

// Strict inverse of to_string. Throws InputError on anything else.
Vertex parse_vertex(std::string_view text);

class GridGraph {
public:
    GridGraph(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }

    std::size_t vertex_count() const;
    std::size_t edge_count() const;

    bool contains(const Vertex& v) const;
    // Throws InputError if v is not a vertex of this graph.
    void require(const Vertex& v) const;

    // Dense position of v in canonical order: hub, rows, cols, cells row-major.
    std::size_t index_of(const Vertex& v) const;
    Vertex vertex_at(std::size_t index) const;

    std::vector<Vertex> vertices() const;
    std::vector<Vertex> neighbors(const Vertex& v) const;

    // Hop distance from the closed-form table; always in 0..4.
    int distance(const Vertex& u, const Vertex& v) const;

    GridGraph transposed() const { return GridGraph(n_, m_); }

    friend bool operator==(const GridGraph&, const GridGraph&) = default;

private:
    int m_;
    int n_;
};

}  // namespace starprod

template <>
struct std::hash<starprod::Vertex> {
    std::size_t operator()(const starprod::Vertex& v) const noexcept {
        auto k = static_cast<std::uint64_t>(v.kind);
        auto i = static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.i));
        auto j = static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.j));
        return std::hash<std::uint64_t>{}((k << 60) ^ (i << 30) ^ j);
    }
};
