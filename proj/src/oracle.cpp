#include "flipforest/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flipforest::oracle {

namespace {

constexpr int kDefaultGuard = 9;

std::vector<Edge> all_chords(int n) {
    std::vector<Edge> chords;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) chords.emplace_back(a, b);
    return chords;
}

// Grows a non-crossing forest over the lexicographic chord list; each accepted
// prefix is extended only with later chords, so every tree is found once.
void grow(int n, const std::vector<Edge>& chords, const std::vector<std::vector<char>>& crossing,
          size_t next, std::vector<int>& picked, std::vector<int>& parent,
          std::vector<NcTree>& out) {
    if (picked.size() == static_cast<size_t>(n - 1)) {
        std::vector<Edge> edges;
        edges.reserve(picked.size());
        for (int id : picked) edges.push_back(chords[id]);
        out.push_back(NcTree{n, std::move(edges)});
        return;
    }
    size_t needed = static_cast<size_t>(n - 1) - picked.size();
    for (size_t c = next; c + needed <= chords.size(); ++c) {
        const Edge& e = chords[c];
        bool bad = false;
        for (int id : picked) {
            if (crossing[id][c]) {
                bad = true;
                break;
            }
        }
        if (bad) continue;
        // cycle check with a rollback-friendly union-find on the fly
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x];
            return x;
        };
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) continue;
        parent[ra] = rb;
        picked.push_back(static_cast<int>(c));
        grow(n, chords, crossing, c + 1, picked, parent, out);
        picked.pop_back();
        parent[ra] = ra;
    }
}

NcTree prufer_decode(int n, const std::vector<int>& code) {
    std::vector<int> deg(n + 1, 1);
    for (int v : code) ++deg[v];
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int ptr = 1;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : code) {
        edges.emplace_back(leaf, v);
        if (--deg[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n);
    std::sort(edges.begin(), edges.end());
    return NcTree{n, std::move(edges)};
}

bool pairwise_non_crossing(const NcTree& t) {
    for (size_t i = 0; i < t.edges.size(); ++i)
        for (size_t j = i + 1; j < t.edges.size(); ++j)
            if (edges_cross(t.edges[i], t.edges[j])) return false;
    return true;
}

void sort_canonical(std::vector<NcTree>& trees) {
    std::sort(trees.begin(), trees.end(),
              [](const NcTree& x, const NcTree& y) { return tree_key(x) < tree_key(y); });
}

uint64_t fnv1a(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

int guard_limit() {
    if (const char* env = std::getenv("FLIPFOREST_MAX_N")) {
        int v = std::atoi(env);
        if (v >= 2) return v;
    }
    return kDefaultGuard;
}

void check_guard(int n) {
    if (n < 2 || n > guard_limit())
        throw Error("TooLarge", "n=" + std::to_string(n) + " outside oracle range [2, " +
                                    std::to_string(guard_limit()) + "]");
}

std::vector<NcTree> enumerate_trees(int n) {
    check_guard(n);
    auto chords = all_chords(n);
    std::vector<std::vector<char>> crossing(chords.size(), std::vector<char>(chords.size(), 0));
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j)
            crossing[i][j] = crossing[j][i] = edges_cross(chords[i], chords[j]);

    std::vector<NcTree> out;
    std::vector<int> picked;
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    grow(n, chords, crossing, 0, picked, parent, out);
    sort_canonical(out);
    return out;
}

std::vector<NcTree> enumerate_trees_prufer(int n) {
    check_guard(n);
    std::vector<NcTree> out;
    if (n == 2) {
        out.push_back(NcTree{2, {Edge(1, 2)}});
        return out;
    }
    std::vector<int> code(n - 2, 1);
    while (true) {
        NcTree t = prufer_decode(n, code);
        if (pairwise_non_crossing(t)) out.push_back(std::move(t));
        int pos = n - 3;
        while (pos >= 0 && code[pos] == n) code[pos--] = 1;
        if (pos < 0) break;
        ++code[pos];
    }
    sort_canonical(out);
    return out;
}

unsigned long long closed_form_count(int n) {
    // C(3n-3, n-1) / (2n-1), computed exactly in 64 bits for desk-scale n.
    unsigned long long num = 1, den = 1;
    for (int k = 1; k <= n - 1; ++k) {
        num *= static_cast<unsigned long long>(3 * n - 3 - (n - 1) + k);
        den *= static_cast<unsigned long long>(k);
        unsigned long long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    assert(den == 1);
    return num / static_cast<unsigned long long>(2 * n - 1);
}

std::vector<NcTree> neighbors(const NcTree& t) {
    std::vector<NcTree> out;
    for (const Edge& removed : t.edges) {
        for (int a = 1; a <= t.n; ++a) {
            for (int b = a + 1; b <= t.n; ++b) {
                Edge added(a, b);
                if (t.contains(added)) continue;
                Flip flip{removed, added};
                if (flip_is_valid(t, flip)) out.push_back(apply_flip(t, flip));
            }
        }
    }
    return out;
}

FlipGraph FlipGraph::build(int n) {
    FlipGraph g;
    g.n = n;
    g.trees = enumerate_trees(n);
    g.adj.resize(g.trees.size());
    for (size_t i = 0; i < g.trees.size(); ++i) g.index.emplace(tree_key(g.trees[i]), i);
    for (size_t i = 0; i < g.trees.size(); ++i) {
        for (const NcTree& nb : neighbors(g.trees[i])) {
            int j = g.id_of(nb);
            if (j > static_cast<int>(i)) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(static_cast<int>(i));
            }
        }
    }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    return g;
}

int FlipGraph::id_of(const NcTree& t) const {
    auto it = index.find(tree_key(t));
    if (it == index.end()) throw Error("UnknownTree", "tree is not a vertex of this flip graph");
    return it->second;
}

std::vector<int> FlipGraph::bfs_from(int src) const {
    std::vector<int> dist(trees.size(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> FlipGraph::eccentricities_serial() const {
    std::vector<int> ecc(trees.size(), 0);
    for (size_t v = 0; v < trees.size(); ++v) {
        auto dist = bfs_from(static_cast<int>(v));
        ecc[v] = *std::max_element(dist.begin(), dist.end());
    }
    return ecc;
}

std::vector<int> FlipGraph::eccentricities_parallel() const {
    std::vector<int> ecc(trees.size(), 0);
    const int64_t count = static_cast<int64_t>(trees.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (int64_t v = 0; v < count; ++v) {
        auto dist = bfs_from(static_cast<int>(v));
        ecc[v] = *std::max_element(dist.begin(), dist.end());
    }
    return ecc;
}

void FlipGraph::write(std::ostream& out) const {
    out << "n " << n << " trees " << trees.size() << "\n";
    for (const NcTree& t : trees) {
        for (size_t i = 0; i < t.edges.size(); ++i) {
            if (i) out << " ";
            out << t.edges[i].a << " " << t.edges[i].b;
        }
        out << "\n";
    }
    for (const auto& row : adj) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << " ";
            out << row[i];
        }
        out << "\n";
    }
}

FlipGraph FlipGraph::read(std::istream& in) {
    std::string tag_n, tag_trees;
    int n = 0;
    size_t count = 0;
    if (!(in >> tag_n >> n >> tag_trees >> count) || tag_n != "n" || tag_trees != "trees")
        throw Error("Parse", "bad flip-graph header");
    std::string line;
    std::getline(in, line);

    FlipGraph g;
    g.n = n;
    for (size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) throw Error("Parse", "truncated flip-graph tree block");
        std::istringstream s(line);
        std::vector<Edge> edges;
        int a, b;
        while (s >> a >> b) edges.emplace_back(a, b);
        g.trees.push_back(make_tree(n, std::move(edges)));
        g.index.emplace(tree_key(g.trees.back()), i);
    }
    g.adj.resize(count);
    for (size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) throw Error("Parse", "truncated flip-graph adjacency block");
        std::istringstream s(line);
        int w;
        while (s >> w) {
            if (w < 0 || static_cast<size_t>(w) >= count)
                throw Error("Parse", "adjacency index out of range");
            g.adj[i].push_back(w);
        }
    }
    return g;
}

std::string FlipGraph::cache_name() const {
    std::ostringstream body;
    write(body);
    std::ostringstream name;
    name << "flipgraph_n" << n << "_" << std::hex << fnv1a(body.str()) << ".fg";
    return name.str();
}

int exact_distance(const NcTree& t1, const NcTree& t2) {
    if (t1.n != t2.n) throw Error("MismatchedN", "distance between trees of different n");
    check_guard(t1.n);
    if (t1 == t2) return 0;
    FlipGraph g = FlipGraph::build(t1.n);
    auto dist = g.bfs_from(g.id_of(t1));
    int d = dist[g.id_of(t2)];
    assert(d > 0 && "flip graph is connected");
    return d;
}

DiameterResult diameter(const FlipGraph& g, bool parallel) {
    auto ecc = parallel ? g.eccentricities_parallel() : g.eccentricities_serial();
    int best = 0, src = 0;
    for (size_t v = 0; v < ecc.size(); ++v) {
        if (ecc[v] > best) {
            best = ecc[v];
            src = static_cast<int>(v);
        }
    }
    auto dist = g.bfs_from(src);
    int dst = src;
    for (size_t v = 0; v < dist.size(); ++v) {
        if (dist[v] == best) {
            dst = static_cast<int>(v);
            break;
        }
    }
    return DiameterResult{best, g.trees[src], g.trees[dst]};
}

DiameterResult diameter(int n, bool parallel) {
    check_guard(n);
    return diameter(FlipGraph::build(n), parallel);
}

}  // namespace flipforest::oracle
