#include "kapdeg/tournament.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <thread>

namespace kapdeg {

int Transcript::wins_of(Label l) const {
    int count = 0;
    for (const Round& r : rounds_)
        if (r.winner == l) ++count;
    return count;
}

bool Transcript::competes(Label l) const {
    for (const Round& r : rounds_)
        if (r.winner == l || r.loser == l) return true;
    return false;
}

Composition Transcript::win_counts() const {
    if (!tree_.has_standard_labels())
        throw std::invalid_argument("win counts need labels {a,b,c,1..n}");
    std::vector<int> parts(static_cast<std::size_t>(tree_.n()), 0);
    for (const Round& r : rounds_)
        if (r.winner.is_num()) ++parts[static_cast<std::size_t>(r.winner.number()) - 1];
    return Composition(std::move(parts));
}

Transcript run_tournament(const LabeledTree& t) {
    const auto& nodes = t.nodes();
    int size = static_cast<int>(nodes.size());

    std::vector<int> parent(static_cast<std::size_t>(size), -1);
    for (int i = 0; i < size; ++i) {
        if (!nodes[i].is_leaf()) {
            parent[static_cast<std::size_t>(nodes[i].left)] = i;
            parent[static_cast<std::size_t>(nodes[i].right)] = i;
        }
    }
    auto vertex_edges = [&](int v) -> std::array<int, 3> {
        if (v == 0) return {0, nodes[0].left, nodes[0].right};
        return {v, nodes[v].left, nodes[v].right};
    };

    std::vector<std::optional<Label>> label(static_cast<std::size_t>(size));
    label[0] = Label::a();
    int total_rounds = 0;
    for (int i = 1; i < size; ++i) {
        if (nodes[i].is_leaf())
            label[static_cast<std::size_t>(i)] = nodes[i].label;
        else
            ++total_rounds;
    }

    std::vector<Round> rounds;
    rounds.reserve(static_cast<std::size_t>(total_rounds));
    for (int r = 1; r <= total_rounds; ++r) {
        int best_vertex = -1, best_edge = -1, ties = 0;
        Label best_loser, best_winner;
        for (int v = 0; v < size; ++v) {
            if (nodes[v].is_leaf()) continue;
            int unlabeled = -1, labeled_count = 0;
            Label first_label, second_label;
            for (int e : vertex_edges(v)) {
                if (label[static_cast<std::size_t>(e)]) {
                    (labeled_count == 0 ? first_label : second_label) =
                        *label[static_cast<std::size_t>(e)];
                    ++labeled_count;
                } else {
                    unlabeled = e;
                }
            }
            if (labeled_count != 2) continue;
            Label i = std::min(first_label, second_label);
            Label j = std::max(first_label, second_label);
            if (best_vertex < 0 || best_loser < i) {
                best_vertex = v;
                best_edge = unlabeled;
                best_loser = i;
                best_winner = j;
                ties = 1;
            } else if (i == best_loser) {
                ++ties;
            }
        }
        if (best_vertex < 0)
            throw std::logic_error("tournament stalled before labeling every edge");
        if (ties != 1)
            throw std::logic_error("eligible-pair maximizer is not unique");

        // The unlabeled edge sits above an internal node, so both of its
        // endpoints are internal vertices; the far one decides laziness.
        int far = parent[static_cast<std::size_t>(best_edge)] == best_vertex
                      ? best_edge
                      : parent[static_cast<std::size_t>(best_edge)];
        bool lazy = false;
        for (int f : vertex_edges(far)) {
            if (f == best_edge) continue;
            const auto& lf = label[static_cast<std::size_t>(f)];
            if (lf && *lf != best_winner && best_loser < *lf) {
                lazy = true;
                break;
            }
        }
        Label advancer = lazy ? best_loser : best_winner;
        label[static_cast<std::size_t>(best_edge)] = advancer;
        rounds.push_back(Round{r, best_loser, best_winner, advancer, lazy, best_edge});
    }

    std::vector<Label> final_labels;
    final_labels.reserve(static_cast<std::size_t>(size));
    for (int e = 0; e < size; ++e) {
        if (!label[static_cast<std::size_t>(e)])
            throw std::logic_error("tournament left an edge unlabeled");
        final_labels.push_back(*label[static_cast<std::size_t>(e)]);
    }
    return Transcript(t, std::move(rounds), std::move(final_labels));
}

Composition classify(const LabeledTree& t) {
    if (!t.is_ab_adjacent())
        throw std::invalid_argument("classification needs the a and b leaf edges adjacent");
    if (!t.has_standard_labels())
        throw std::invalid_argument("classification needs labels {a,b,c,1..n}");
    return run_tournament(t).win_counts();
}

void tour_set(const Composition& k, const TreeVisitor& visit) {
    if (!k.is_weak_of_length())
        throw std::invalid_argument("composition parts must sum to the length");
    enumerate_trees(k.length(), true, [&](const LabeledTree& t) {
        if (classify(t) == k) visit(t);
    });
}

std::vector<LabeledTree> collect_tour_set(const Composition& k) {
    std::vector<LabeledTree> out;
    tour_set(k, [&](const LabeledTree& t) { out.push_back(t); });
    return out;
}

std::map<Composition, std::uint64_t> tour_census(int n, int jobs) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        std::map<Composition, std::uint64_t> census;
        enumerate_trees(n, true, [&](const LabeledTree& t) { ++census[classify(t)]; });
        return census;
    }
    std::vector<std::map<Composition, std::uint64_t>> partial(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            enumerate_trees_partition(n, true, w, jobs, [&, w](const LabeledTree& t) {
                ++partial[static_cast<std::size_t>(w)][classify(t)];
            });
        });
    }
    for (auto& worker : workers) worker.join();
    std::map<Composition, std::uint64_t> census;
    for (const auto& part : partial)
        for (const auto& [k, count] : part) census[k] += count;
    return census;
}

namespace {

int leaf_index(const LabeledTree& t, Label l) {
    const auto& nodes = t.nodes();
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].is_leaf() && nodes[i].label == l) return i;
    return -1;
}

int parent_index(const LabeledTree& t, int node_id) {
    const auto& nodes = t.nodes();
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].left == node_id || nodes[i].right == node_id) return i;
    return -1;
}

// Splits the leaf edge of `at` with a middle vertex carrying a fresh leaf.
LabeledTree split_leaf_edge(const LabeledTree& t, Label at, Label fresh) {
    const auto& nodes = t.nodes();
    TreeBuilder b;
    bool found = false;
    std::function<int(int)> copy = [&](int id) -> int {
        const auto& nd = nodes[static_cast<std::size_t>(id)];
        if (nd.is_leaf()) {
            int leaf = b.add_leaf(nd.label);
            if (nd.label == at) {
                found = true;
                return b.add_internal(leaf, b.add_leaf(fresh));
            }
            return leaf;
        }
        int l = copy(nd.left);
        int r = copy(nd.right);
        return b.add_internal(l, r);
    };
    int first = copy(nodes[0].left);
    int second = copy(nodes[0].right);
    if (!found) throw std::logic_error("leaf to split not found");
    return LabeledTree::from_builder(b, first, second);
}

}  // namespace

std::pair<LabeledTree, Label> pi_lazy(const LabeledTree& t) {
    if (!t.is_ab_adjacent())
        throw std::invalid_argument("pi_lazy needs the a and b leaf edges adjacent");
    if (!t.has_standard_labels())
        throw std::invalid_argument("pi_lazy needs labels {a,b,c,1..n}");
    if (t.n() < 1) throw std::invalid_argument("pi_lazy needs n >= 1");

    Transcript tr = run_tournament(t);
    const Round& first_round = tr.rounds().front();
    Label i = first_round.loser;
    Label j = first_round.winner;
    int kj = tr.wins_of(j);

    int leaf_i = leaf_index(t, i);
    int leaf_j = leaf_index(t, j);
    int p = parent_index(t, leaf_i);
    if (p != parent_index(t, leaf_j) || p <= 0)
        throw std::logic_error("first tournament pair is not a cherry");

    Label v_label;
    int threshold;
    if (kj > 1) {
        if (!i.is_num()) throw std::logic_error("non-lazy reduction with sentinel loser");
        v_label = j;
        threshold = i.number();
    } else {
        v_label = i;
        threshold = j.number();
    }
    auto renumber = [&](Label l) {
        if (l.is_num() && l.number() > threshold) return Label::num(l.number() - 1);
        return l;
    };

    const auto& nodes = t.nodes();
    TreeBuilder b;
    std::function<int(int)> copy = [&](int id) -> int {
        if (id == p) return b.add_leaf(renumber(v_label));
        const auto& nd = nodes[static_cast<std::size_t>(id)];
        if (nd.is_leaf()) return b.add_leaf(renumber(nd.label));
        int l = copy(nd.left);
        int r = copy(nd.right);
        return b.add_internal(l, r);
    };
    int first = copy(nodes[0].left);
    int second = copy(nodes[0].right);
    return {LabeledTree::from_builder(b, first, second), j};
}

LabeledTree pi_lazy_inverse(const LabeledTree& reduced, Label j, const Composition& k) {
    if (!k.is_weak_of_length() || k.length() < 1)
        throw std::invalid_argument("k must be a weak composition of n >= 1");
    if (!j.is_num() || j.number() > k.length())
        throw std::invalid_argument("winner label out of range");
    RightmostZero rz = rightmost_zero(k);
    if (!rz.less_than(j.number()))
        throw std::invalid_argument("winner must exceed the rightmost zero of k");
    int kj = k.part(j.number());
    if (kj < 1) throw std::invalid_argument("winner must have a positive part in k");
    if (classify(reduced) != ktilde(k, j.number()))
        throw std::invalid_argument("tree is not in Tour(ktilde(k, j))");

    LabeledTree result = LabeledTree::star();
    if (kj > 1) {
        // non-lazy case: the reduced tree carries the winner as the merged
        // leaf (shifted down by one); reopen the freed slot i below it
        if (rz.is_c) throw std::logic_error("k_j > 1 forces a numeric rightmost zero");
        int inum = rz.index;
        LabeledTree shifted = reduced.map_labels([&](Label l) {
            if (l.is_num() && l.number() >= inum) return Label::num(l.number() + 1);
            return l;
        });
        result = split_leaf_edge(shifted, j, Label::num(inum));
    } else {
        // lazy case: the merged leaf carries the loser i; reattach the winner
        int jnum = j.number();
        LabeledTree shifted = reduced.map_labels([&](Label l) {
            if (l.is_num() && l.number() >= jnum) return Label::num(l.number() + 1);
            return l;
        });
        Label at = rz.is_c ? Label::c() : Label::num(rz.index);
        result = split_leaf_edge(shifted, at, j);
    }

    auto [back, winner] = pi_lazy(result);
    if (back != reduced || winner != j)
        throw std::logic_error("pi_lazy_inverse does not invert pi_lazy");
    return result;
}

}  // namespace kapdeg
