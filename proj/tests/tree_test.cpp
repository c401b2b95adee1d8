#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "kapdeg/tree.hpp"
#include "test_util.hpp"

using namespace kapdeg;
using testutil::odd_double_factorial;

namespace {

std::uint64_t count_trees(int n, bool ab_only) {
    std::uint64_t count = 0;
    enumerate_trees(n, ab_only, [&](const LabeledTree&) { ++count; });
    return count;
}

// re-encode a tree through the builder with child order shuffled per vertex
LabeledTree rebuild_shuffled(const LabeledTree& t, testutil::Rng& rng) {
    TreeBuilder b;
    std::function<int(int)> copy = [&](int id) -> int {
        const auto& nd = t.nodes()[static_cast<std::size_t>(id)];
        if (nd.is_leaf()) return b.add_leaf(nd.label);
        bool flip = rng.next_below(2) == 1;
        int first = copy(flip ? nd.right : nd.left);
        int second = copy(flip ? nd.left : nd.right);
        return b.add_internal(first, second);
    };
    bool flip = rng.next_below(2) == 1;
    int first = copy(flip ? t.nodes()[0].right : t.nodes()[0].left);
    int second = copy(flip ? t.nodes()[0].left : t.nodes()[0].right);
    return LabeledTree::from_builder(b, first, second);
}

}  // namespace

TEST_CASE("star tree") {
    LabeledTree t0 = LabeledTree::star();
    CHECK(t0.n() == 0);
    CHECK(t0.leaf_count() == 3);
    CHECK(t0.edge_count() == 3);
    CHECK(t0.is_ab_adjacent());
    CHECK(t0.has_standard_labels());
    CHECK(t0.to_string() == "(a,b,c)");
}

TEST_CASE("parse canonicalizes child order") {
    const char* canonical = "(a,b,((c,1),((2,3),4)))";
    CHECK(LabeledTree::parse(canonical).to_string() == canonical);
    // same tree written with shuffled children and the anchor elsewhere
    CHECK(LabeledTree::parse("(b,(((2,3),4),(1,c)),a)").to_string() == canonical);
    CHECK(LabeledTree::parse(" (a, b, (((2, 3), 4), (c, 1))) ").to_string() == canonical);
    CHECK(LabeledTree::parse("(a,b,c)") == LabeledTree::star());

    CHECK_THROWS_AS(LabeledTree::parse("(b,c,1)"), std::invalid_argument);
    CHECK_THROWS_AS(LabeledTree::parse("(a,b,(c,a))"), std::invalid_argument);
    CHECK_THROWS_AS(LabeledTree::parse("(a,b,(c,c))"), std::invalid_argument);
    CHECK_THROWS_AS(LabeledTree::parse("(a,b"), std::invalid_argument);
    CHECK_THROWS_AS(LabeledTree::parse("(a,b,c)x"), std::invalid_argument);
}

TEST_CASE("inserting into the star gives the three four-leaf trees") {
    LabeledTree t0 = LabeledTree::star();
    std::set<std::string> trees;
    for (int e = 0; e < t0.edge_count(); ++e)
        trees.insert(t0.insert_leaf(e, Label::num(1)).to_string());
    CHECK(trees.size() == 3);
    CHECK(trees.count("(a,b,(c,1))") == 1);
    CHECK(trees.count("(a,(b,1),c)") == 1);
    CHECK(trees.count("(a,(b,c),1)") == 1);
}

TEST_CASE("insertion at each edge gives 2n+3 distinct trees") {
    for (int n = 0; n <= 4; ++n) {
        enumerate_trees(n, false, [&](const LabeledTree& t) {
            std::set<LabeledTree> grown;
            for (int e = 0; e < t.edge_count(); ++e)
                grown.insert(t.insert_leaf(e, Label::num(n + 1)));
            CHECK(static_cast<int>(grown.size()) == 2 * n + 3);
        });
    }
}

TEST_CASE("insert errors") {
    LabeledTree t = LabeledTree::parse("(a,b,(c,1))");
    CHECK_THROWS_AS(t.insert_leaf(99, Label::num(2)), std::invalid_argument);
    CHECK_THROWS_AS(t.insert_leaf(0, Label::num(1)), std::invalid_argument);
    CHECK_THROWS_AS(t.insert_leaf(0, Label::a()), std::invalid_argument);
}

TEST_CASE("enumeration counts are the double factorials") {
    for (int n = 0; n <= 5; ++n) {
        CHECK(BigUint(count_trees(n, true)) == odd_double_factorial(n));
        CHECK(BigUint(count_trees(n, false)) == odd_double_factorial(n + 1));
    }
    CHECK(count_trees(2, true) == 3);
    CHECK(count_trees(4, true) == 105);
    auto star_only = collect_trees(0, true);
    REQUIRE(star_only.size() == 1);
    CHECK(star_only[0] == LabeledTree::star());
}

TEST_CASE("enumerated trees are pairwise distinct and ab-adjacent when flagged") {
    for (int n = 0; n <= 4; ++n) {
        std::set<LabeledTree> seen;
        enumerate_trees(n, true, [&](const LabeledTree& t) {
            CHECK(t.is_ab_adjacent());
            CHECK(t.has_standard_labels());
            seen.insert(t);
        });
        CHECK(BigUint(seen.size()) == odd_double_factorial(n));
    }
    std::set<LabeledTree> all;
    enumerate_trees(4, false, [&](const LabeledTree& t) { all.insert(t); });
    CHECK(all.size() == 945);
}

TEST_CASE("enumeration respects the resource cap") {
    CHECK(enumeration_limit() == 10);
    CHECK_THROWS_AS(enumerate_trees(enumeration_limit() + 1, true, [](const LabeledTree&) {}),
                    ResourceLimitError);
    CHECK_THROWS_AS(enumerate_trees(-1, true, [](const LabeledTree&) {}),
                    std::invalid_argument);
}

TEST_CASE("partitions concatenate to the full stream") {
    for (int parts : {1, 3, 7}) {
        std::vector<std::string> merged;
        for (int i = 0; i < parts; ++i)
            enumerate_trees_partition(4, true, i, parts,
                                      [&](const LabeledTree& t) { merged.push_back(t.to_string()); });
        std::vector<std::string> whole;
        enumerate_trees(4, true, [&](const LabeledTree& t) { whole.push_back(t.to_string()); });
        CHECK(merged == whole);
    }
}

TEST_CASE("forget undoes insertion") {
    for (int n = 0; n <= 4; ++n) {
        enumerate_trees(n, false, [&](const LabeledTree& t) {
            for (int e = 0; e < t.edge_count(); ++e) {
                LabeledTree grown = t.insert_leaf(e, Label::num(n + 1));
                CHECK(grown.forget(Label::num(n + 1)) == t);
            }
        });
    }
}

TEST_CASE("forgetting the deepest label of the five-leaf classes") {
    LabeledTree expected = LabeledTree::parse("(a,b,(c,1))");
    CHECK(LabeledTree::parse("(a,b,((c,2),1))").forget(Label::num(2)) == expected);
    CHECK(LabeledTree::parse("(a,b,((c,1),2))").forget(Label::num(2)) == expected);
}

TEST_CASE("forgetting b maps ab-adjacent trees onto trees without b injectively") {
    for (int n = 1; n <= 4; ++n) {
        std::set<LabeledTree> images;
        enumerate_trees(n, true, [&](const LabeledTree& t) {
            LabeledTree forgotten = t.forget(Label::b());
            std::vector<Label> labels = forgotten.leaf_labels();
            CHECK(std::find(labels.begin(), labels.end(), Label::b()) == labels.end());
            images.insert(forgotten);
        });
        CHECK(BigUint(images.size()) == odd_double_factorial(n));
    }
}

TEST_CASE("forget errors") {
    LabeledTree t = LabeledTree::parse("(a,b,(c,1))");
    CHECK_THROWS_AS(t.forget(Label::a()), std::invalid_argument);
    CHECK_THROWS_AS(t.forget(Label::num(7)), std::invalid_argument);
    CHECK_THROWS_AS(LabeledTree::star().forget(Label::c()), std::invalid_argument);
}

TEST_CASE("structure counts survive insert and forget") {
    enumerate_trees(4, false, [&](const LabeledTree& t) {
        CHECK(t.leaf_count() == 4 + 3);
        CHECK(t.edge_count() == 2 * 4 + 3);
        LabeledTree smaller = t.forget(Label::num(4));
        CHECK(smaller.leaf_count() == 6);
        CHECK(smaller.edge_count() == 9);
    });
}

TEST_CASE("branches at the star") {
    BranchView view = LabeledTree::star().branches_at(Label::c());
    REQUIRE(view.branches.size() == 3);
    CHECK(view.branches[0] == std::vector<Label>{Label::a()});
    CHECK(view.branches[1] == std::vector<Label>{Label::b()});
    CHECK(view.branches[2] == std::vector<Label>{Label::c()});
}

TEST_CASE("branches separate the six-leaf example at its largest leaf") {
    LabeledTree t = LabeledTree::parse("(a,b,((1,3),(5,(c,(2,4)))))");
    BranchView view = t.branches_at(Label::num(5));
    std::vector<Label> with_a{Label::a(), Label::b(), Label::num(1), Label::num(3)};
    std::vector<Label> other{Label::c(), Label::num(2), Label::num(4)};
    CHECK(view.branch_containing(Label::a()) == with_a);
    CHECK(view.branch_containing(Label::c()) == other);
}

TEST_CASE("branch sets partition the leaves") {
    for (int n = 0; n <= 5; ++n) {
        enumerate_trees(n, false, [&](const LabeledTree& t) {
            for (Label l : t.leaf_labels()) {
                BranchView view = t.branches_at(l);
                std::set<Label> all;
                std::size_t total = 0;
                for (const auto& branch : view.branches) {
                    total += branch.size();
                    all.insert(branch.begin(), branch.end());
                }
                CHECK(total == all.size());
                CHECK(static_cast<int>(all.size()) == t.leaf_count());
            }
        });
    }
}

TEST_CASE("canonical form is invariant under re-encoding") {
    testutil::Rng rng;
    enumerate_trees(4, false, [&](const LabeledTree& t) {
        for (int trial = 0; trial < 3; ++trial) CHECK(rebuild_shuffled(t, rng) == t);
        CHECK(LabeledTree::parse(t.to_string()) == t);
    });
}
