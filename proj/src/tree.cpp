#include "kapdeg/tree.hpp"

#include <algorithm>
#include <cstdlib>

namespace kapdeg {

int enumeration_limit() {
    static int cached = [] {
        if (const char* env = std::getenv("KAPDEG_MAX_N")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 10;
    }();
    return cached;
}

int TreeBuilder::add_leaf(Label label) {
    nodes_.push_back(RawNode{true, label, -1, -1});
    return static_cast<int>(nodes_.size()) - 1;
}

int TreeBuilder::add_internal(int left, int right) {
    int size = static_cast<int>(nodes_.size());
    if (left < 0 || left >= size || right < 0 || right >= size || left == right)
        throw std::invalid_argument("bad child id in tree builder");
    nodes_.push_back(RawNode{false, Label::a(), left, right});
    return static_cast<int>(nodes_.size()) - 1;
}

const std::vector<Label>& BranchView::branch_containing(Label l) const {
    for (const auto& branch : branches)
        if (std::find(branch.begin(), branch.end(), l) != branch.end()) return branch;
    throw std::invalid_argument("label not present in any branch");
}

LabeledTree LabeledTree::star() {
    TreeBuilder b;
    int leaf_b = b.add_leaf(Label::b());
    int leaf_c = b.add_leaf(Label::c());
    return from_builder(b, leaf_b, leaf_c);
}

LabeledTree LabeledTree::from_builder(const TreeBuilder& builder, int first, int second) {
    const auto& raw = builder.nodes_;
    int size = static_cast<int>(raw.size());
    if (first < 0 || first >= size || second < 0 || second >= size)
        throw std::invalid_argument("bad root child id");

    std::vector<char> visited(raw.size(), 0);
    std::vector<Label> mins(raw.size());
    std::function<Label(int)> compute_min = [&](int id) -> Label {
        if (visited[id]) throw std::invalid_argument("builder node used twice");
        visited[id] = 1;
        if (raw[id].is_leaf) return mins[id] = raw[id].label;
        Label l = compute_min(raw[id].left);
        Label r = compute_min(raw[id].right);
        return mins[id] = std::min(l, r);
    };
    compute_min(first);
    compute_min(second);

    LabeledTree out;
    out.nodes_.push_back(Node{});
    std::function<int(int)> emit = [&](int id) -> int {
        int me = static_cast<int>(out.nodes_.size());
        out.nodes_.push_back(Node{});
        if (raw[id].is_leaf) {
            out.nodes_[me].label = raw[id].label;
        } else {
            int l = raw[id].left, r = raw[id].right;
            if (mins[r] < mins[l]) std::swap(l, r);
            int li = emit(l);
            int ri = emit(r);
            out.nodes_[me].left = li;
            out.nodes_[me].right = ri;
        }
        return me;
    };
    int f = first, s = second;
    if (mins[s] < mins[f]) std::swap(f, s);
    int li = emit(f);
    int ri = emit(s);
    out.nodes_[0].left = li;
    out.nodes_[0].right = ri;

    std::vector<Label> labels;
    for (const Node& nd : out.nodes_)
        if (nd.is_leaf()) labels.push_back(nd.label);
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i + 1 < labels.size(); ++i)
        if (labels[i] == labels[i + 1]) throw std::invalid_argument("duplicate leaf label");
    for (Label l : labels)
        if (l == Label::a()) throw std::invalid_argument("label a may only anchor the root");
    out.n_ = static_cast<int>(std::count_if(labels.begin(), labels.end(),
                                            [](Label l) { return l.is_num(); }));
    return out;
}

int LabeledTree::leaf_count() const {
    int count = 1;  // implicit leaf a
    for (const Node& nd : nodes_)
        if (nd.is_leaf()) ++count;
    return count;
}

std::vector<Label> LabeledTree::leaf_labels() const {
    std::vector<Label> out{Label::a()};
    for (const Node& nd : nodes_)
        if (nd.is_leaf()) out.push_back(nd.label);
    std::sort(out.begin(), out.end());
    return out;
}

bool LabeledTree::has_standard_labels() const {
    std::vector<Label> labels = leaf_labels();
    std::vector<Label> expected{Label::a(), Label::b(), Label::c()};
    for (int i = 1; i <= n_; ++i) expected.push_back(Label::num(i));
    return labels == expected;
}

bool LabeledTree::is_ab_adjacent() const {
    const Node& root = nodes_[0];
    auto is_b = [&](int id) { return nodes_[id].is_leaf() && nodes_[id].label == Label::b(); };
    return is_b(root.left) || is_b(root.right);
}

int LabeledTree::find_leaf(Label label) const {
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
        if (nodes_[i].is_leaf() && nodes_[i].label == label) return i;
    return -1;
}

int LabeledTree::parent_of(int node_id) const {
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
        if (nodes_[i].left == node_id || nodes_[i].right == node_id) return i;
    return -1;
}

void LabeledTree::collect_labels(int node_id, std::vector<Label>& out) const {
    const Node& nd = nodes_[node_id];
    if (nd.is_leaf()) {
        out.push_back(nd.label);
        return;
    }
    collect_labels(nd.left, out);
    collect_labels(nd.right, out);
}

LabeledTree LabeledTree::insert_leaf(int edge_id, Label new_label) const {
    if (edge_id < 0 || edge_id >= edge_count())
        throw std::invalid_argument("unknown edge identifier");
    if (new_label == Label::a() || find_leaf(new_label) >= 0)
        throw std::invalid_argument("duplicate leaf label");

    TreeBuilder b;
    std::function<int(int)> copy = [&](int id) -> int {
        const Node& nd = nodes_[id];
        int me;
        if (nd.is_leaf()) {
            me = b.add_leaf(nd.label);
        } else {
            int l = copy(nd.left);
            int r = copy(nd.right);
            me = b.add_internal(l, r);
        }
        if (id == edge_id) me = b.add_internal(b.add_leaf(new_label), me);
        return me;
    };

    if (edge_id == 0) {
        // subdividing the leaf edge of `a`: the old root becomes an ordinary
        // internal vertex and the new leaf hangs next to `a`
        int l = copy(nodes_[0].left);
        int r = copy(nodes_[0].right);
        int old_root = b.add_internal(l, r);
        int fresh = b.add_leaf(new_label);
        return from_builder(b, fresh, old_root);
    }
    int first = copy(nodes_[0].left);
    int second = copy(nodes_[0].right);
    return from_builder(b, first, second);
}

LabeledTree LabeledTree::forget(Label label) const {
    if (label == Label::a())
        throw std::invalid_argument("cannot forget the root anchor a");
    int leaf_id = find_leaf(label);
    if (leaf_id < 0) throw std::invalid_argument("label absent from tree");
    if (leaf_count() < 4)
        throw std::invalid_argument("tree too small to forget a leaf");

    int p = parent_of(leaf_id);
    TreeBuilder b;
    std::function<int(int)> copy = [&](int id) -> int {
        if (id == p) {
            int sib = nodes_[id].left == leaf_id ? nodes_[id].right : nodes_[id].left;
            return copy(sib);
        }
        const Node& nd = nodes_[id];
        if (nd.is_leaf()) return b.add_leaf(nd.label);
        int l = copy(nd.left);
        int r = copy(nd.right);
        return b.add_internal(l, r);
    };

    if (p == 0) {
        // the leaf hangs off the root: its sibling subtree becomes the new
        // tree next to `a`
        int sib = nodes_[0].left == leaf_id ? nodes_[0].right : nodes_[0].left;
        const Node& sn = nodes_[sib];
        if (sn.is_leaf()) throw std::logic_error("forget would leave fewer than 3 leaves");
        int first = copy(sn.left);
        int second = copy(sn.right);
        return from_builder(b, first, second);
    }
    int first = copy(nodes_[0].left);
    int second = copy(nodes_[0].right);
    return from_builder(b, first, second);
}

LabeledTree LabeledTree::map_labels(const std::function<Label(Label)>& fn) const {
    TreeBuilder b;
    std::function<int(int)> copy = [&](int id) -> int {
        const Node& nd = nodes_[id];
        if (nd.is_leaf()) return b.add_leaf(fn(nd.label));
        int l = copy(nd.left);
        int r = copy(nd.right);
        return b.add_internal(l, r);
    };
    int first = copy(nodes_[0].left);
    int second = copy(nodes_[0].right);
    return from_builder(b, first, second);
}

BranchView LabeledTree::branches_at(Label leaf_label) const {
    BranchView view;
    view.at_leaf = leaf_label;
    if (leaf_label == Label::a()) {
        std::vector<Label> left, right;
        collect_labels(nodes_[0].left, left);
        collect_labels(nodes_[0].right, right);
        view.branches = {{Label::a()}, std::move(left), std::move(right)};
    } else {
        int leaf_id = find_leaf(leaf_label);
        if (leaf_id < 0) throw std::invalid_argument("label absent from tree");
        int p = parent_of(leaf_id);
        int sib = nodes_[p].left == leaf_id ? nodes_[p].right : nodes_[p].left;
        std::vector<Label> sibling_labels, inside;
        collect_labels(sib, sibling_labels);
        collect_labels(p, inside);
        std::vector<Label> rest{Label::a()};
        for (const Node& nd : nodes_) {
            if (!nd.is_leaf()) continue;
            if (std::find(inside.begin(), inside.end(), nd.label) == inside.end())
                rest.push_back(nd.label);
        }
        view.branches = {{leaf_label}, std::move(sibling_labels), std::move(rest)};
    }
    for (auto& branch : view.branches) std::sort(branch.begin(), branch.end());
    std::sort(view.branches.begin(), view.branches.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return view;
}

std::string LabeledTree::to_string() const {
    std::function<std::string(int)> str = [&](int id) -> std::string {
        const Node& nd = nodes_[id];
        if (nd.is_leaf()) return nd.label.to_string();
        return "(" + str(nd.left) + "," + str(nd.right) + ")";
    };
    return "(a," + str(nodes_[0].left) + "," + str(nodes_[0].right) + ")";
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    TreeBuilder builder;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    char peek() {
        skip_ws();
        if (pos >= text.size()) throw std::invalid_argument("unexpected end of tree literal");
        return text[pos];
    }
    void expect(char ch) {
        if (peek() != ch)
            throw std::invalid_argument(std::string("expected '") + ch + "' in tree literal");
        ++pos;
    }

    // -1 encodes the bare root anchor `a`
    int parse_item(bool top_level) {
        char ch = peek();
        if (ch == '(') return parse_pair();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ',' && text[pos] != ')' && text[pos] != ' ')
            ++pos;
        auto label = Label::parse(text.substr(start, pos - start));
        if (!label) throw std::invalid_argument("bad leaf label in tree literal");
        if (*label == Label::a()) {
            if (!top_level)
                throw std::invalid_argument("label a must be a top-level entry");
            return -1;
        }
        return builder.add_leaf(*label);
    }

    int parse_pair() {
        expect('(');
        int first = parse_item(false);
        expect(',');
        int second = parse_item(false);
        expect(')');
        return builder.add_internal(first, second);
    }

    LabeledTree parse_tree() {
        expect('(');
        int items[3];
        items[0] = parse_item(true);
        expect(',');
        items[1] = parse_item(true);
        expect(',');
        items[2] = parse_item(true);
        expect(')');
        skip_ws();
        if (pos != text.size())
            throw std::invalid_argument("trailing characters after tree literal");
        int children[2];
        int found = 0, anchor = 0;
        for (int item : items) {
            if (item < 0) {
                ++anchor;
            } else {
                if (found == 2) throw std::invalid_argument("root must contain the label a");
                children[found++] = item;
            }
        }
        if (anchor != 1 || found != 2)
            throw std::invalid_argument("root must contain the label a exactly once");
        return LabeledTree::from_builder(builder, children[0], children[1]);
    }
};

}  // namespace

LabeledTree LabeledTree::parse(std::string_view text) {
    Parser p{text, 0, TreeBuilder{}};
    return p.parse_tree();
}

namespace {

bool skip_edge_for_ab(const LabeledTree& t, int edge) {
    if (edge == 0) return true;  // leaf edge of a
    const auto& nd = t.nodes()[edge];
    return nd.is_leaf() && nd.label == Label::b();
}

void enumerate_from(const LabeledTree& t, int next, int n, bool ab_only,
                    const TreeVisitor& visit) {
    if (next > n) {
        visit(t);
        return;
    }
    Label fresh = Label::num(next);
    for (int e = 0; e < t.edge_count(); ++e) {
        if (ab_only && skip_edge_for_ab(t, e)) continue;
        enumerate_from(t.insert_leaf(e, fresh), next + 1, n, ab_only, visit);
    }
}

void check_enumeration_args(int n) {
    if (n < 0) throw std::invalid_argument("tree size must be nonnegative");
    if (n > enumeration_limit())
        throw ResourceLimitError("enumeration size " + std::to_string(n) +
                                 " exceeds the configured cap " +
                                 std::to_string(enumeration_limit()) +
                                 " (set KAPDEG_MAX_N to override)");
}

}  // namespace

void enumerate_trees(int n, bool ab_adjacent_only, const TreeVisitor& visit) {
    check_enumeration_args(n);
    enumerate_from(LabeledTree::star(), 1, n, ab_adjacent_only, visit);
}

void enumerate_trees_partition(int n, bool ab_adjacent_only, int index, int count,
                               const TreeVisitor& visit) {
    check_enumeration_args(n);
    if (count < 1 || index < 0 || index >= count)
        throw std::invalid_argument("bad partition index");
    int depth = std::min(2, n);
    std::vector<LabeledTree> prefixes;
    enumerate_from(LabeledTree::star(), 1, depth, ab_adjacent_only,
                   [&](const LabeledTree& t) { prefixes.push_back(t); });
    // contiguous blocks, so concatenating partitions in index order restores
    // the depth-first stream
    std::size_t total = prefixes.size();
    std::size_t begin = total * index / count;
    std::size_t end = total * (index + 1) / count;
    for (std::size_t i = begin; i < end; ++i)
        enumerate_from(prefixes[i], depth + 1, n, ab_adjacent_only, visit);
}

std::vector<LabeledTree> collect_trees(int n, bool ab_adjacent_only) {
    std::vector<LabeledTree> out;
    enumerate_trees(n, ab_adjacent_only, [&](const LabeledTree& t) { out.push_back(t); });
    return out;
}

}  // namespace kapdeg
