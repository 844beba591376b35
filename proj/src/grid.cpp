#include "starprod/grid.hpp"

#include <charconv>
#include <limits>

#include "starprod/errors.hpp"

namespace starprod {

namespace {

// Positive decimal without sign or leading zeros.
std::optional<int> parse_index(std::string_view s) {
    if (s.empty() || s.front() == '0') return std::nullopt;
    for (char ch : s)
        if (ch < '0' || ch > '9') return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

[[noreturn]] void bad_vertex(std::string_view text) {
    throw InputError("invalid vertex '" + std::string(text) + "'");
}

}  // namespace

std::string to_string(const Vertex& v) {
    switch (v.kind) {
        case VertexKind::Hub: return "hub";
        case VertexKind::Row: return "r" + std::to_string(v.i);
        case VertexKind::Col: return "c" + std::to_string(v.j);
        case VertexKind::Cell: return "a" + std::to_string(v.i) + "," + std::to_string(v.j);
    }
    return "?";
}

Vertex parse_vertex(std::string_view text) {
    if (text == "hub") return Vertex::hub();
    if (text.size() < 2) bad_vertex(text);
    std::string_view rest = text.substr(1);
    switch (text.front()) {
        case 'r':
            if (auto i = parse_index(rest)) return Vertex::row(*i);
            break;
        case 'c':
            if (auto j = parse_index(rest)) return Vertex::col(*j);
            break;
        case 'a': {
            auto comma = rest.find(',');
            if (comma == std::string_view::npos) break;
            auto i = parse_index(rest.substr(0, comma));
            auto j = parse_index(rest.substr(comma + 1));
            if (i && j) return Vertex::cell(*i, *j);
            break;
        }
        default: break;
    }
    bad_vertex(text);
}

GridGraph::GridGraph(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1)
        throw InputError("star sizes must be positive (got m=" + std::to_string(m) +
                         ", n=" + std::to_string(n) + ")");
    // Keep m*n and the dense index space inside 32-bit territory.
    if (static_cast<long long>(m) * n > std::numeric_limits<int>::max() / 2)
        throw InputError("grid too large");
}

std::size_t GridGraph::vertex_count() const {
    auto m = static_cast<std::size_t>(m_), n = static_cast<std::size_t>(n_);
    return 1 + m + n + m * n;
}

std::size_t GridGraph::edge_count() const {
    auto m = static_cast<std::size_t>(m_), n = static_cast<std::size_t>(n_);
    return m + n + 2 * m * n;
}

bool GridGraph::contains(const Vertex& v) const {
    switch (v.kind) {
        case VertexKind::Hub: return v.i == 0 && v.j == 0;
        case VertexKind::Row: return v.j == 0 && v.i >= 1 && v.i <= m_;
        case VertexKind::Col: return v.i == 0 && v.j >= 1 && v.j <= n_;
        case VertexKind::Cell: return v.i >= 1 && v.i <= m_ && v.j >= 1 && v.j <= n_;
    }
    return false;
}

void GridGraph::require(const Vertex& v) const {
    if (!contains(v))
        throw InputError("vertex " + to_string(v) + " is not in the grid (m=" +
                         std::to_string(m_) + ", n=" + std::to_string(n_) + ")");
}

std::size_t GridGraph::index_of(const Vertex& v) const {
    require(v);
    auto m = static_cast<std::size_t>(m_), n = static_cast<std::size_t>(n_);
    switch (v.kind) {
        case VertexKind::Hub: return 0;
        case VertexKind::Row: return static_cast<std::size_t>(v.i);
        case VertexKind::Col: return m + static_cast<std::size_t>(v.j);
        case VertexKind::Cell:
            return 1 + m + n + static_cast<std::size_t>(v.i - 1) * n + static_cast<std::size_t>(v.j - 1);
    }
    return 0;
}

Vertex GridGraph::vertex_at(std::size_t index) const {
    auto m = static_cast<std::size_t>(m_), n = static_cast<std::size_t>(n_);
    if (index >= vertex_count()) throw InputError("vertex index out of range");
    if (index == 0) return Vertex::hub();
    if (index <= m) return Vertex::row(static_cast<int>(index));
    if (index <= m + n) return Vertex::col(static_cast<int>(index - m));
    std::size_t k = index - 1 - m - n;
    return Vertex::cell(static_cast<int>(k / n) + 1, static_cast<int>(k % n) + 1);
}

std::vector<Vertex> GridGraph::vertices() const {
    std::vector<Vertex> out;
    out.reserve(vertex_count());
    out.push_back(Vertex::hub());
    for (int i = 1; i <= m_; ++i) out.push_back(Vertex::row(i));
    for (int j = 1; j <= n_; ++j) out.push_back(Vertex::col(j));
    for (int i = 1; i <= m_; ++i)
        for (int j = 1; j <= n_; ++j) out.push_back(Vertex::cell(i, j));
    return out;
}

std::vector<Vertex> GridGraph::neighbors(const Vertex& v) const {
    require(v);
    std::vector<Vertex> out;
    switch (v.kind) {
        case VertexKind::Hub:
            out.reserve(static_cast<std::size_t>(m_ + n_));
            for (int i = 1; i <= m_; ++i) out.push_back(Vertex::row(i));
            for (int j = 1; j <= n_; ++j) out.push_back(Vertex::col(j));
            break;
        case VertexKind::Row:
            out.push_back(Vertex::hub());
            for (int j = 1; j <= n_; ++j) out.push_back(Vertex::cell(v.i, j));
            break;
        case VertexKind::Col:
            out.push_back(Vertex::hub());
            for (int i = 1; i <= m_; ++i) out.push_back(Vertex::cell(i, v.j));
            break;
        case VertexKind::Cell:
            out.push_back(Vertex::row(v.i));
            out.push_back(Vertex::col(v.j));
            break;
    }
    return out;
}

int GridGraph::distance(const Vertex& u, const Vertex& v) const {
    require(u);
    require(v);
    if (u == v) return 0;
    // Order the pair so that a.kind <= b.kind.
    const Vertex& a = u.kind <= v.kind ? u : v;
    const Vertex& b = u.kind <= v.kind ? v : u;
    switch (a.kind) {
        case VertexKind::Hub:
            return b.is_cell() ? 2 : 1;
        case VertexKind::Row:
            if (b.is_cell()) return b.i == a.i ? 1 : 3;
            return 2;  // another row, or any column
        case VertexKind::Col:
            if (b.is_cell()) return b.j == a.j ? 1 : 3;
            return 2;
        case VertexKind::Cell: {
            bool same_row = a.i == b.i, same_col = a.j == b.j;
            return (same_row != same_col) ? 2 : 4;
        }
    }
    return 0;
}

}  // namespace starprod
