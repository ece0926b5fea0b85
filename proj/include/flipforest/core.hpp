#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flipforest {

// 1-based hull position; vertices v_1..v_n appear in this order on the hull.
using VertexId = int;

// Typed failure used across the library. `kind` is a stable machine-readable
// token (e.g. "RemovedNotPresent", "NotNiceCaterpillar"); what() is for humans.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Chord between two hull vertices, stored canonically with a < b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    Edge() = default;
    Edge(VertexId x, VertexId y) : a(x < y ? x : y), b(x < y ? y : x) {
        if (x == y) throw Error("BadEdge", "edge endpoints must differ");
    }
    auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

// True iff x lies strictly inside the arc traversed from a to b in
// increasing cyclic label order (wrapping past n). Independent of n.
bool cyclic_strictly_between(VertexId a, VertexId x, VertexId b);

// Chords of a convex polygon cross iff they share no endpoint and their
// endpoints interleave on the hull cycle. Symmetric; relabeling-invariant.
bool edges_cross(const Edge& e, const Edge& f);

// Hull edge (v_j, v_{j+1}); the closing edge (v_n, v_1) counts as border.
bool is_border_edge(int n, const Edge& e);

// j in [1, n]: border edge (v_j, v_{j+1}), with j = n giving (v_n, v_1).
Edge border_edge(int n, int j);

// Non-crossing spanning tree as a value: n plus a sorted edge set.
// Construct via make_tree (validated) or from parts you know are valid.
struct NcTree {
    int n = 0;
    std::vector<Edge> edges;  // sorted, unique

    bool contains(const Edge& e) const;
    bool operator==(const NcTree&) const = default;
};

enum class TreeFault { None, WrongEdgeCount, NotSpanning, HasCycle, Crossing };

struct ValidationResult {
    TreeFault fault = TreeFault::None;
    Edge first;   // offending pair for Crossing
    Edge second;

    bool ok() const { return fault == TreeFault::None; }
    std::string message() const;
};

const char* fault_name(TreeFault f);

// Checks edge count, acyclicity, spanning, pairwise non-crossing, in that
// order; a cycle among the given edges is reported before the (then
// equivalent) spanning failure. Throws Error("BadVertex") on labels
// outside [1, n].
ValidationResult validate_tree(int n, const std::vector<Edge>& edges);

// Validated constructor: sorts, dedups, throws Error("InvalidTree") with the
// validation message when the edge set is not a non-crossing spanning tree.
NcTree make_tree(int n, std::vector<Edge> edges);

int degree(const NcTree& t, VertexId v);
std::vector<std::vector<VertexId>> adjacency(const NcTree& t);
int border_edge_count(const NcTree& t);
bool is_all_border(const NcTree& t);

// Edges of the unique cycle of T + e, starting with e and following the
// tree path from e.a to e.b. Throws EdgeAlreadyPresent.
std::vector<Edge> fundamental_cycle(const NcTree& t, const Edge& e);

struct Flip {
    Edge removed;
    Edge added;

    Flip inverted() const { return Flip{added, removed}; }
    auto operator<=>(const Flip&) const = default;
};

std::string to_string(const Flip& f);

// True iff removing flip.removed and adding flip.added yields a valid
// non-crossing spanning tree. Never throws; meant for tight loops.
bool flip_is_valid(const NcTree& t, const Flip& flip);

// Applies one flip, validating the result. Throws Error with kind
// RemovedNotPresent, AddedAlreadyPresent, or ResultInvalid (message names
// the violated validate_tree clause).
NcTree apply_flip(const NcTree& t, const Flip& flip);

// (T1 \ T2) union (T2 \ T1), sorted. Throws Error("MismatchedN").
std::vector<Edge> symmetric_difference(const NcTree& t1, const NcTree& t2);

// Rotation plus optional reversal of the cyclic vertex order.
// apply(x) = ((x-1+rotation) mod n)+1, or ((rotation + n - (x-1)) mod n)+1
// when reversed. Reversed relabelings are involutions.
struct Relabeling {
    int n = 0;
    int rotation = 0;  // in [0, n)
    bool reversed = false;

    VertexId apply(VertexId x) const;
    Edge apply(const Edge& e) const { return Edge(apply(e.a), apply(e.b)); }
    Flip apply(const Flip& f) const { return Flip{apply(f.removed), apply(f.added)}; }
    NcTree apply(const NcTree& t) const;
    Relabeling inverse() const;

    // Relabeling that maps v to position 1, walking forward (increasing
    // labels) or backward from v.
    static Relabeling to_front(int n, VertexId v, bool backward);
};

// Start tree plus ordered flips; the central verifiable artifact.
struct FlipSeq {
    NcTree start;
    std::vector<Flip> flips;

    int length() const { return static_cast<int>(flips.size()); }
};

// Replays the sequence, throwing on any invalid step; returns the end tree.
NcTree replay(const FlipSeq& seq);

enum class SeqFault { None, StepInvalid, WrongEndpoint };

struct SequenceCheck {
    SeqFault fault = SeqFault::None;
    int length = 0;
    int bad_index = -1;    // 0-based flip index for StepInvalid
    std::string reason;

    bool ok() const { return fault == SeqFault::None; }
};

// Replays flips via apply_flip; ok iff every intermediate tree is valid and
// the final tree equals expected_end.
SequenceCheck validate_sequence(const FlipSeq& seq, const NcTree& expected_end);

// Same sequence walked end-to-start with each flip inverted.
FlipSeq reverse_sequence(const FlipSeq& seq);

// Concatenation; tail.start must equal the end of head.
FlipSeq concat(FlipSeq head, const FlipSeq& tail);

FlipSeq relabel_sequence(const FlipSeq& seq, const Relabeling& rho);

// Fixed-width byte key of the sorted edge list; used for hashing and
// deterministic ordering of trees (labels must fit a byte, i.e. n < 256).
std::string tree_key(const NcTree& t);

}  // namespace flipforest
