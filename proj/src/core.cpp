#include "flipforest/core.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace flipforest {

namespace {

// Disjoint-set with path halving; small and allocation-friendly.
struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool join(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

void check_vertex_range(int n, const Edge& e) {
    if (e.a < 1 || e.b > n)
        throw Error("BadVertex",
                    "edge " + to_string(e) + " has a label outside [1, " + std::to_string(n) + "]");
}

}  // namespace

std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

std::string to_string(const Flip& f) {
    return "-" + to_string(f.removed) + "+" + to_string(f.added);
}

bool cyclic_strictly_between(VertexId a, VertexId x, VertexId b) {
    if (a < b) return a < x && x < b;
    return x > a || x < b;  // wrap-around arc
}

bool edges_cross(const Edge& e, const Edge& f) {
    if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) return false;
    return cyclic_strictly_between(e.a, f.a, e.b) != cyclic_strictly_between(e.a, f.b, e.b);
}

bool is_border_edge(int n, const Edge& e) {
    if (e.b - e.a == 1) return true;
    return e.a == 1 && e.b == n;
}

Edge border_edge(int n, int j) {
    if (j < 1 || j > n) throw Error("BadVertex", "border index " + std::to_string(j));
    return j == n ? Edge(n, 1) : Edge(j, j + 1);
}

bool NcTree::contains(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

const char* fault_name(TreeFault f) {
    switch (f) {
        case TreeFault::None: return "None";
        case TreeFault::WrongEdgeCount: return "WrongEdgeCount";
        case TreeFault::NotSpanning: return "NotSpanning";
        case TreeFault::HasCycle: return "HasCycle";
        case TreeFault::Crossing: return "Crossing";
    }
    return "?";
}

std::string ValidationResult::message() const {
    if (ok()) return "ok";
    std::string m = fault_name(fault);
    if (fault == TreeFault::Crossing) m += " " + to_string(first) + " x " + to_string(second);
    return m;
}

ValidationResult validate_tree(int n, const std::vector<Edge>& edges) {
    for (const Edge& e : edges) check_vertex_range(n, e);
    if (static_cast<int>(edges.size()) != n - 1) return {TreeFault::WrongEdgeCount};

    UnionFind uf(n);
    for (const Edge& e : edges)
        if (!uf.join(e.a, e.b)) return {TreeFault::HasCycle};
    // n-1 acyclic edges on n vertices always span; kept as a separate clause.
    for (int v = 2; v <= n; ++v)
        if (uf.find(v) != uf.find(1)) return {TreeFault::NotSpanning};

    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j)
            if (edges_cross(sorted[i], sorted[j]))
                return {TreeFault::Crossing, sorted[i], sorted[j]};
    return {};
}

NcTree make_tree(int n, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    ValidationResult r = validate_tree(n, edges);
    if (!r.ok()) throw Error("InvalidTree", "n=" + std::to_string(n) + ": " + r.message());
    return NcTree{n, std::move(edges)};
}

int degree(const NcTree& t, VertexId v) {
    int d = 0;
    for (const Edge& e : t.edges) d += (e.a == v || e.b == v);
    return d;
}

std::vector<std::vector<VertexId>> adjacency(const NcTree& t) {
    std::vector<std::vector<VertexId>> adj(t.n + 1);
    for (const Edge& e : t.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    return adj;
}

int border_edge_count(const NcTree& t) {
    int c = 0;
    for (const Edge& e : t.edges) c += is_border_edge(t.n, e);
    return c;
}

bool is_all_border(const NcTree& t) {
    return border_edge_count(t) == static_cast<int>(t.edges.size());
}

std::vector<Edge> fundamental_cycle(const NcTree& t, const Edge& e) {
    check_vertex_range(t.n, e);
    if (t.contains(e)) throw Error("EdgeAlreadyPresent", to_string(e) + " is already in the tree");

    auto adj = adjacency(t);
    std::vector<VertexId> parent(t.n + 1, 0);
    std::vector<VertexId> stack{e.a};
    parent[e.a] = e.a;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        if (u == e.b) break;
        for (VertexId w : adj[u]) {
            if (parent[w] == 0) {
                parent[w] = u;
                stack.push_back(w);
            }
        }
    }
    assert(parent[e.b] != 0 && "spanning tree must connect the endpoints");

    std::vector<Edge> path;
    for (VertexId v = e.b; v != e.a; v = parent[v]) path.emplace_back(v, parent[v]);
    std::reverse(path.begin(), path.end());

    std::vector<Edge> cycle{e};
    cycle.insert(cycle.end(), path.begin(), path.end());
    return cycle;
}

namespace {

// Shared by flip_is_valid and apply_flip. Returns TreeFault::None when the
// swap keeps a non-crossing spanning tree; crossing details in out params.
TreeFault flip_fault(const NcTree& t, const Flip& flip, Edge* cross_with) {
    // Cycle/spanning first, matching validate_tree's clause order: the added
    // edge must reconnect the two components left by the removal.
    auto adj = adjacency(t);
    std::vector<char> seen(t.n + 1, 0);
    std::vector<VertexId> stack{flip.added.a};
    seen[flip.added.a] = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : adj[u]) {
            Edge here(u, w);
            if (here == flip.removed) continue;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    if (seen[flip.added.b]) return TreeFault::HasCycle;

    for (const Edge& e : t.edges) {
        if (e == flip.removed) continue;
        if (edges_cross(e, flip.added)) {
            if (cross_with) *cross_with = e;
            return TreeFault::Crossing;
        }
    }
    return TreeFault::None;
}

}  // namespace

bool flip_is_valid(const NcTree& t, const Flip& flip) {
    if (!t.contains(flip.removed) || t.contains(flip.added)) return false;
    if (flip.added.a < 1 || flip.added.b > t.n) return false;
    return flip_fault(t, flip, nullptr) == TreeFault::None;
}

NcTree apply_flip(const NcTree& t, const Flip& flip) {
    if (!t.contains(flip.removed))
        throw Error("RemovedNotPresent", to_string(flip.removed) + " is not in the tree");
    if (t.contains(flip.added))
        throw Error("AddedAlreadyPresent", to_string(flip.added) + " is already in the tree");
    check_vertex_range(t.n, flip.added);

    Edge cross_with;
    TreeFault fault = flip_fault(t, flip, &cross_with);
    if (fault != TreeFault::None) {
        std::string msg = fault_name(fault);
        if (fault == TreeFault::Crossing)
            msg += " " + to_string(flip.added) + " x " + to_string(cross_with);
        throw Error("ResultInvalid", msg + " after " + to_string(flip));
    }

    NcTree out = t;
    out.edges.erase(std::find(out.edges.begin(), out.edges.end(), flip.removed));
    out.edges.insert(std::upper_bound(out.edges.begin(), out.edges.end(), flip.added), flip.added);
    return out;
}

std::vector<Edge> symmetric_difference(const NcTree& t1, const NcTree& t2) {
    if (t1.n != t2.n)
        throw Error("MismatchedN",
                    "trees on " + std::to_string(t1.n) + " and " + std::to_string(t2.n) + " points");
    std::vector<Edge> out;
    std::set_symmetric_difference(t1.edges.begin(), t1.edges.end(), t2.edges.begin(),
                                  t2.edges.end(), std::back_inserter(out));
    return out;
}

VertexId Relabeling::apply(VertexId x) const {
    if (!reversed) return (x - 1 + rotation) % n + 1;
    return (rotation + n - (x - 1)) % n + 1;
}

NcTree Relabeling::apply(const NcTree& t) const {
    NcTree out;
    out.n = t.n;
    out.edges.reserve(t.edges.size());
    for (const Edge& e : t.edges) out.edges.push_back(apply(e));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

Relabeling Relabeling::inverse() const {
    if (reversed) return *this;  // reflections are involutions
    return Relabeling{n, (n - rotation) % n, false};
}

Relabeling Relabeling::to_front(int n, VertexId v, bool backward) {
    if (!backward) return Relabeling{n, (n - (v - 1)) % n, false};
    return Relabeling{n, (v - 1) % n, true};
}

NcTree replay(const FlipSeq& seq) {
    NcTree cur = seq.start;
    for (const Flip& f : seq.flips) cur = apply_flip(cur, f);
    return cur;
}

SequenceCheck validate_sequence(const FlipSeq& seq, const NcTree& expected_end) {
    SequenceCheck out;
    ValidationResult start_ok = validate_tree(seq.start.n, seq.start.edges);
    if (!start_ok.ok()) {
        out.fault = SeqFault::StepInvalid;
        out.bad_index = -1;
        out.reason = "start tree: " + start_ok.message();
        return out;
    }
    NcTree cur = seq.start;
    for (size_t i = 0; i < seq.flips.size(); ++i) {
        try {
            cur = apply_flip(cur, seq.flips[i]);
        } catch (const Error& err) {
            out.fault = SeqFault::StepInvalid;
            out.bad_index = static_cast<int>(i);
            out.reason = err.kind() + ": " + err.what();
            return out;
        }
    }
    if (!(cur == expected_end)) {
        out.fault = SeqFault::WrongEndpoint;
        out.reason = "sequence ends at a different tree";
        return out;
    }
    out.length = seq.length();
    return out;
}

FlipSeq reverse_sequence(const FlipSeq& seq) {
    FlipSeq out;
    out.start = replay(seq);
    out.flips.reserve(seq.flips.size());
    for (auto it = seq.flips.rbegin(); it != seq.flips.rend(); ++it)
        out.flips.push_back(it->inverted());
    return out;
}

FlipSeq concat(FlipSeq head, const FlipSeq& tail) {
    assert(replay(head) == tail.start && "sequences must meet at a common tree");
    head.flips.insert(head.flips.end(), tail.flips.begin(), tail.flips.end());
    return head;
}

FlipSeq relabel_sequence(const FlipSeq& seq, const Relabeling& rho) {
    FlipSeq out;
    out.start = rho.apply(seq.start);
    out.flips.reserve(seq.flips.size());
    for (const Flip& f : seq.flips) out.flips.push_back(rho.apply(f));
    return out;
}

std::string tree_key(const NcTree& t) {
    assert(t.n < 256);
    std::string key;
    key.reserve(2 * t.edges.size());
    for (const Edge& e : t.edges) {
        key.push_back(static_cast<char>(e.a));
        key.push_back(static_cast<char>(e.b));
    }
    return key;
}

}  // namespace flipforest
