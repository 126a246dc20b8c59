#include "folkman/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <stdexcept>

namespace folkman {

namespace {

// Individualization-refinement canonizer. A node of the search tree is an
// ordered partition of V; refinement makes it equitable, then the first
// non-singleton cell is split by individualizing each of its vertices in
// turn. Every discrete leaf yields a labeling; the lexicographically least
// relabeled adjacency wins. Two leaves with equal adjacency expose an
// automorphism, which both feeds the orbit output and prunes sibling
// branches inside the same orbit.
struct Canonizer {
    const Graph& g;
    int n;
    std::array<VertexSet, kCanonMaxVertices> adj{};

    bool have_best = false;
    std::array<VertexSet, kCanonMaxVertices> best_rows{};
    std::array<int, kCanonMaxVertices> best_lab{};   // vertex -> position
    std::array<int, kCanonMaxVertices> best_vert{};  // position -> vertex

    std::vector<std::vector<int>> generators;
    std::array<int, kCanonMaxVertices> parent{};

    explicit Canonizer(const Graph& graph) : g(graph), n(graph.order()) {
        for (int v = 0; v < n; ++v) {
            adj[v] = g.neighbors(v);
            parent[v] = v;
        }
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent[b] = a;
        else parent[a] = b;
    }

    using Coloring = std::array<int, kCanonMaxVertices>;

    // Equitable refinement: split every cell by the vector of neighbor
    // counts against all cells, keeping cell order invariant (old cell
    // first, then count vectors lexicographically).
    void refine(Coloring& color, int& k) const {
        std::array<int, kCanonMaxVertices> order{};
        std::array<std::array<std::uint8_t, kCanonMaxVertices>, kCanonMaxVertices> cnt{};
        while (true) {
            std::array<VertexSet, kCanonMaxVertices> cmask{};
            for (int v = 0; v < n; ++v) cmask[color[v]] |= VertexSet{1} << v;
            for (int v = 0; v < n; ++v)
                for (int c = 0; c < k; ++c)
                    cnt[v][c] = static_cast<std::uint8_t>(popcount(adj[v] & cmask[c]));
            for (int v = 0; v < n; ++v) order[v] = v;
            std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
                if (color[a] != color[b]) return color[a] < color[b];
                return std::memcmp(cnt[a].data(), cnt[b].data(),
                                   static_cast<std::size_t>(k)) < 0;
            });
            Coloring next{};
            int nk = 0;
            for (int i = 0; i < n; ++i) {
                int v = order[i];
                if (i > 0) {
                    int u = order[i - 1];
                    if (color[u] != color[v] ||
                        std::memcmp(cnt[u].data(), cnt[v].data(),
                                    static_cast<std::size_t>(k)) != 0)
                        ++nk;
                }
                next[v] = nk;
            }
            ++nk;
            if (nk == k) return;
            color = next;
            k = nk;
        }
    }

    void leaf(const Coloring& color) {
        std::array<int, kCanonMaxVertices> vert{};
        for (int v = 0; v < n; ++v) vert[color[v]] = v;
        std::array<VertexSet, kCanonMaxVertices> rows{};
        for (int v = 0; v < n; ++v) {
            VertexSet nb = adj[v];
            VertexSet out = 0;
            while (nb) {
                int u = lowest_vertex(nb);
                nb &= nb - 1;
                out |= VertexSet{1} << color[u];
            }
            rows[color[v]] = out;
        }
        if (!have_best) {
            have_best = true;
            best_rows = rows;
            for (int v = 0; v < n; ++v) best_lab[v] = color[v];
            best_vert = vert;
            return;
        }
        int cmp = 0;
        for (int p = 0; p < n; ++p) {
            if (rows[p] != best_rows[p]) {
                cmp = rows[p] < best_rows[p] ? -1 : 1;
                break;
            }
        }
        if (cmp < 0) {
            best_rows = rows;
            for (int v = 0; v < n; ++v) best_lab[v] = color[v];
            best_vert = vert;
        } else if (cmp == 0) {
            std::vector<int> alpha(static_cast<std::size_t>(n));
            bool identity = true;
            for (int v = 0; v < n; ++v) {
                alpha[static_cast<std::size_t>(v)] = best_vert[color[v]];
                if (alpha[static_cast<std::size_t>(v)] != v) identity = false;
            }
            if (!identity) {
                for (int v = 0; v < n; ++v)
                    unite(v, alpha[static_cast<std::size_t>(v)]);
                generators.push_back(std::move(alpha));
            }
        }
    }

    void recurse(Coloring color, int k) {
        refine(color, k);
        int target = -1;
        std::array<int, kCanonMaxVertices> size{};
        for (int v = 0; v < n; ++v) ++size[color[v]];
        for (int c = 0; c < k; ++c) {
            if (size[c] >= 2) {
                target = c;
                break;
            }
        }
        if (target < 0) {
            leaf(color);
            return;
        }
        std::array<int, kCanonMaxVertices> tried{};
        int tried_count = 0;
        for (int v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            bool skip = false;
            for (int i = 0; i < tried_count && !skip; ++i)
                if (find(tried[i]) == find(v)) skip = true;
            if (skip) continue;
            tried[tried_count++] = v;
            Coloring child{};
            for (int u = 0; u < n; ++u) {
                child[u] = 2 * color[u];
                if (color[u] == target && u != v) child[u] += 1;
            }
            // compress values to 0..k
            std::array<int, 2 * kCanonMaxVertices> map{};
            map.fill(-1);
            for (int u = 0; u < n; ++u) map[child[u]] = 1;
            int next = 0;
            for (int c = 0; c < 2 * kCanonMaxVertices; ++c)
                if (map[c] == 1) map[c] = next++;
            for (int u = 0; u < n; ++u) child[u] = map[child[u]];
            recurse(child, next);
        }
    }
};

}  // namespace

CanonResult canonical_labeling(const Graph& g) {
    int n = g.order();
    if (n > kCanonMaxVertices)
        throw std::length_error("canonizer limited to 32 vertices");
    CanonResult result;
    if (n == 0) {
        result.canonical = Graph::empty(0);
        return result;
    }
    Canonizer search(g);
    Canonizer::Coloring color{};
    search.recurse(color, 1);

    std::vector<VertexSet> rows(search.best_rows.begin(),
                                search.best_rows.begin() + n);
    result.canonical = from_rows(n, std::move(rows));
    result.labeling.assign(search.best_lab.begin(), search.best_lab.begin() + n);
    result.generators = std::move(search.generators);
    result.orbit.resize(static_cast<std::size_t>(n));
    std::array<int, kCanonMaxVertices> rep{};
    rep.fill(kCanonMaxVertices);
    for (int v = 0; v < n; ++v)
        rep[search.find(v)] = std::min(rep[search.find(v)], v);
    for (int v = 0; v < n; ++v)
        result.orbit[static_cast<std::size_t>(v)] = rep[search.find(v)];
    return result;
}

Graph canonical_form(const Graph& g) { return canonical_labeling(g).canonical; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace folkman
