#include "folkman/graph.hpp"

#include <bit>
#include <istream>
#include <stdexcept>

namespace folkman {

int popcount(VertexSet s) { return std::popcount(s); }

int lowest_vertex(VertexSet s) {
    return s == 0 ? -1 : std::countr_zero(s);
}

namespace {

// Mutable adjacency rows used while assembling a graph value.
struct Rows {
    int n;
    std::vector<VertexSet> r;

    explicit Rows(int order) : n(order) {
        if (order < 0 || order > kMaxVertices)
            throw std::length_error("graph order must be in 0..64");
        r.assign(static_cast<std::size_t>(order), 0);
    }
    void edge(int u, int v) {
        if (u == v) return;
        r[u] |= VertexSet{1} << v;
        r[v] |= VertexSet{1} << u;
    }
};

}  // namespace

Graph from_rows(int n, std::vector<VertexSet> rows) {
    Graph g;
    g.n_ = n;
    g.rows_ = std::move(rows);
    return g;
}

Graph Graph::empty(int n) {
    Rows rows(n);
    return from_rows(n, std::move(rows.r));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Rows rows(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        rows.edge(u, v);
    }
    return from_rows(n, std::move(rows.r));
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = kMaxVertices + 1;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::size_t GraphHash::operator()(const Graph& g) const {
    std::size_t h = static_cast<std::size_t>(g.order()) * 0x9e3779b97f4a7c15ull;
    for (int v = 0; v < g.order(); ++v)
        h = (h ^ g.neighbors(v)) * 0x100000001b3ull;
    return h;
}

Graph complete(int n) {
    Rows rows(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) rows.edge(u, v);
    return from_rows(n, std::move(rows.r));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Rows rows(n);
    for (int v = 0; v < n; ++v) rows.edge(v, (v + 1) % n);
    return from_rows(n, std::move(rows.r));
}

Graph circulant(const CirculantSpec& spec) {
    Rows rows(spec.n);
    for (int s : spec.connection) {
        if (s < 1 || s > spec.n / 2)
            throw std::invalid_argument("circulant residue out of 1..n/2");
        for (int v = 0; v < spec.n; ++v) rows.edge(v, (v + s) % spec.n);
    }
    return from_rows(spec.n, std::move(rows.r));
}

Graph complement(const Graph& g) {
    int n = g.order();
    Rows rows(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) rows.edge(u, v);
    return from_rows(n, std::move(rows.r));
}

Graph join(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    if (n > kMaxVertices) throw std::length_error("join exceeds 64 vertices");
    Rows rows(n);
    for (auto [u, v] : a.edges()) rows.edge(u, v);
    for (auto [u, v] : b.edges()) rows.edge(a.order() + u, a.order() + v);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) rows.edge(u, a.order() + v);
    return from_rows(n, std::move(rows.r));
}

Graph induced(const Graph& g, VertexSet keep) {
    if (keep & ~g.vertices())
        throw std::invalid_argument("vertex set not contained in V(G)");
    int m = popcount(keep);
    int map[kMaxVertices];
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((keep >> v) & 1) map[v] = next++;
    Rows rows(m);
    for (int u = 0; u < g.order(); ++u) {
        if (!((keep >> u) & 1)) continue;
        VertexSet nb = g.neighbors(u) & keep;
        while (nb) {
            int v = lowest_vertex(nb);
            nb &= nb - 1;
            rows.edge(map[u], map[v]);
        }
    }
    return from_rows(m, std::move(rows.r));
}

Graph remove(const Graph& g, VertexSet drop) {
    if (drop & ~g.vertices())
        throw std::invalid_argument("vertex set not contained in V(G)");
    return induced(g, g.vertices() & ~drop);
}

Graph add_vertex(const Graph& g, VertexSet nbrs) {
    int n = g.order();
    if (n + 1 > kMaxVertices) throw std::length_error("graph full");
    if (nbrs & ~g.vertices())
        throw std::invalid_argument("neighborhood not contained in V(G)");
    Graph out;
    out.n_ = n + 1;
    out.rows_ = g.rows_;
    out.rows_.push_back(nbrs);
    VertexSet bit = VertexSet{1} << n;
    while (nbrs) {
        int v = lowest_vertex(nbrs);
        nbrs &= nbrs - 1;
        out.rows_[v] |= bit;
    }
    return out;
}

namespace {

// graph6: 6-bit groups biased by 63; the upper triangle is emitted in
// column order (0,1),(0,2),(1,2),(0,3),...
constexpr int kBias = 63;

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    append_size(out, n);
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty graph6 string");

    std::size_t pos = 0;
    auto next6 = [&]() -> int {
        if (pos >= text.size())
            throw std::invalid_argument("truncated graph6 string");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < kBias || c > kBias + 63)
            throw std::invalid_argument("graph6 byte out of range");
        return c - kBias;
    };

    long long n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
            throw std::invalid_argument("graph6 orders above 258047 unsupported");
        long long a = next6(), b = next6(), c = next6();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next6();
    }
    if (n > kMaxVertices)
        throw std::length_error("graph6 order exceeds 64 vertices");

    Rows rows(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (nbits == 0) {
                acc = next6();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) rows.edge(row, static_cast<int>(col));
            --nbits;
        }
    }
    if (pos != text.size())
        throw std::invalid_argument("trailing bytes after graph6 payload");
    return from_rows(static_cast<int>(n), std::move(rows.r));
}

std::vector<Graph> parse_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace folkman
