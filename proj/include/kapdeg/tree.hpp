#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kapdeg/label.hpp"

namespace kapdeg {

// Thrown when an exhaustive enumeration would exceed the configured size cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Hard cap on the size parameter for exhaustive tree enumeration.
// Defaults to 10; override with the KAPDEG_MAX_N environment variable.
int enumeration_limit();

class LabeledTree;

// Scratch arena for assembling a tree bottom-up before canonicalization.
class TreeBuilder {
public:
    int add_leaf(Label label);
    int add_internal(int left, int right);

private:
    struct RawNode {
        bool is_leaf;
        Label label;
        int left, right;
    };
    std::vector<RawNode> nodes_;
    friend class LabeledTree;
};

// The three connected components obtained by deleting the internal vertex
// next to a given leaf.  One of them is the leaf itself.
struct BranchView {
    Label at_leaf;
    std::vector<std::vector<Label>> branches;  // each sorted; branches sorted by min label

    const std::vector<Label>& branch_containing(Label l) const;
};

// A leaf-labeled trivalent tree, stored in canonical rooted form: the root
// is the internal vertex adjacent to leaf `a` (which is implicit), and every
// internal vertex orders its two child subtrees by minimum leaf label.  Two
// trees are equal exactly when they are isomorphic as leaf-labeled trees.
//
// Nodes are stored in preorder, so node indices double as stable edge
// identifiers: edge k (k >= 1) is the edge between node k and its parent,
// and edge 0 is the leaf edge of `a`.
class LabeledTree {
public:
    struct Node {
        Label label;         // meaningful for leaves
        int left = -1;       // child node index, -1 for leaves
        int right = -1;
        bool is_leaf() const { return left < 0; }
        friend bool operator==(const Node&, const Node&) = default;
        friend auto operator<=>(const Node&, const Node&) = default;
    };

    // The unique tree on {a, b, c}.
    static LabeledTree star();

    // Assemble from a builder; `first` and `second` become the two subtrees
    // hanging off the root vertex next to `a`.  Canonicalizes and validates.
    static LabeledTree from_builder(const TreeBuilder& builder, int first, int second);

    // Parses the nested-parenthesis text format, e.g. "(a,b,((c,1),((2,3),4)))".
    // Child order in the input is irrelevant; the result is canonical.
    static LabeledTree parse(std::string_view text);

    const std::vector<Node>& nodes() const { return nodes_; }
    int edge_count() const { return static_cast<int>(nodes_.size()); }

    // Size parameter: the number of numeric leaf labels.
    int n() const { return n_; }
    int leaf_count() const;
    std::vector<Label> leaf_labels() const;  // sorted, includes a

    // True when the leaves are exactly {a, b, c, 1..n}.
    bool has_standard_labels() const;
    bool is_ab_adjacent() const;

    // Subdivides the identified edge with a fresh internal vertex and hangs a
    // new leaf there.
    LabeledTree insert_leaf(int edge_id, Label new_label) const;

    // The forgetting map on dual trees: deletes the leaf and its edge, then
    // suppresses the resulting degree-2 vertex.  Labels are not renumbered.
    // Forgetting `a` is not supported (it anchors the canonical rooting).
    LabeledTree forget(Label label) const;

    // Applies fn to every leaf label; result is re-canonicalized.
    LabeledTree map_labels(const std::function<Label(Label)>& fn) const;

    BranchView branches_at(Label leaf_label) const;

    std::string to_string() const;

    friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
    friend auto operator<=>(const LabeledTree&, const LabeledTree&) = default;

private:
    int n_ = 0;
    std::vector<Node> nodes_;

    // node index of the leaf carrying `label`, or -1
    int find_leaf(Label label) const;
    int parent_of(int node_id) const;
    void collect_labels(int node_id, std::vector<Label>& out) const;
    friend class TreeBuilder;
};

using TreeVisitor = std::function<void(const LabeledTree&)>;

// Yields every leaf-labeled trivalent tree on {a,b,c,1..n} exactly once, in a
// deterministic depth-first order over leaf-insertion sequences.  With
// ab_adjacent_only set, only trees whose a and b leaf edges share a vertex
// are produced ((2n-1)!! of them instead of (2n+1)!!).
void enumerate_trees(int n, bool ab_adjacent_only, const TreeVisitor& visit);

// Deterministic partitioning of the same stream for parallel consumption:
// partition `index` (0 <= index < count) yields a subsequence, and
// concatenating the partitions in index order restores the full stream.
void enumerate_trees_partition(int n, bool ab_adjacent_only, int index, int count,
                               const TreeVisitor& visit);

std::vector<LabeledTree> collect_trees(int n, bool ab_adjacent_only);

}  // namespace kapdeg
