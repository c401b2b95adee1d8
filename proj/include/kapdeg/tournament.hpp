#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kapdeg/composition.hpp"
#include "kapdeg/tree.hpp"

namespace kapdeg {

// One round of a lazy tournament.  `labeled_edge` is the edge that received a
// label this round, identified by the tree's canonical edge numbering.
struct Round {
    int index = 0;  // 1-based
    Label loser;
    Label winner;
    Label advancer;
    bool lazy = false;
    int labeled_edge = -1;
};

// Full record of a lazy tournament run: the tree, the n rounds in order, and
// the final edge labeling (indexed by edge id; every edge is labeled at
// termination).
class Transcript {
public:
    Transcript(LabeledTree tree, std::vector<Round> rounds,
               std::vector<Label> edge_labels)
        : tree_(std::move(tree)), rounds_(std::move(rounds)),
          edge_labels_(std::move(edge_labels)) {}

    const LabeledTree& tree() const { return tree_; }
    const std::vector<Round>& rounds() const { return rounds_; }
    const std::vector<Label>& edge_labels() const { return edge_labels_; }

    int wins_of(Label l) const;
    bool competes(Label l) const;

    // Win counts k_i over the numeric labels; requires standard labels.
    Composition win_counts() const;

private:
    LabeledTree tree_;
    std::vector<Round> rounds_;
    std::vector<Label> edge_labels_;
};

// Runs the lazy tournament: repeatedly the pair of labeled edges sharing a
// vertex with an unlabeled third edge and maximal smaller label faces off;
// the larger label wins; the loser advances instead of the winner exactly
// when the unlabeled edge touches a labeled edge u != winner with u > loser.
// A tree with n numeric leaves yields exactly n rounds.
Transcript run_tournament(const LabeledTree& t);

// Win-count composition of an ab-adjacent tree; t belongs to Tour(result).
Composition classify(const LabeledTree& t);

// Streams Tour(k): the ab-adjacent trees whose win counts equal k.
void tour_set(const Composition& k, const TreeVisitor& visit);
std::vector<LabeledTree> collect_tour_set(const Composition& k);

// Counts |Tour(k)| for every k at once by classifying the full ab-adjacent
// stream, optionally across several worker threads (the result does not
// depend on the worker count).
std::map<Composition, std::uint64_t> tour_census(int n, int jobs = 1);

// Realizes the first tournament round geometrically: deletes the first pair
// to face off, relabels their shared vertex by the winner (loser when the
// winner's count is 1), and renumbers.  Returns the reduced tree and the
// winner j; the result lies in Tour(ktilde(classify(t), j)).
std::pair<LabeledTree, Label> pi_lazy(const LabeledTree& t);

// Inverse of pi_lazy: reconstructs the unique preimage of `reduced` in
// Tour(k) whose first-round winner is j.  Requires reduced in
// Tour(ktilde(k, j)).
LabeledTree pi_lazy_inverse(const LabeledTree& reduced, Label j, const Composition& k);

}  // namespace kapdeg
