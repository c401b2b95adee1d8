#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "kapdeg/parking.hpp"
#include "test_util.hpp"

using namespace kapdeg;
using testutil::odd_double_factorial;

namespace {

Composition comp(const char* text) { return Composition::parse(text); }
ParkingFunction pf(const char* text) { return ParkingFunction::parse(text); }

// Independent reconstruction oracle: builds the tree top-down from the root,
// reading cars from greatest to least and pairing each column with the
// smallest available loser; laziness applies exactly when the car tops its
// column (except for the final car).
LabeledTree reverse_reconstruct(const ParkingFunction& p) {
    int n = p.size();
    if (n == 0) return LabeledTree::star();

    std::set<Label> available{Label::c()};
    for (int col = 1; col <= n; ++col)
        if (p.columns()[static_cast<std::size_t>(col) - 1].empty())
            available.insert(Label::num(col));

    struct Slot {
        int left = -1, right = -1;
        Label leaf;
        bool is_leaf = false;
    };
    std::vector<Slot> arena(1);
    std::map<Label, int> slot_of;
    slot_of[Label::num(p.column_of(n))] = 0;  // the final round labels the root edge

    Label active;
    for (int m = n; m >= 1; --m) {
        int jcol = p.column_of(m);
        Label j = Label::num(jcol);
        bool lazy = m == p.top_of_column(jcol) && m != n;
        if (!lazy) {
            REQUIRE(!available.empty());
            active = *available.begin();
            available.erase(available.begin());
        }
        Label i = active;
        int w = slot_of.at(lazy ? i : j);
        int left = static_cast<int>(arena.size());
        arena.emplace_back();
        int right = static_cast<int>(arena.size());
        arena.emplace_back();
        arena[static_cast<std::size_t>(w)].left = left;
        arena[static_cast<std::size_t>(w)].right = right;
        slot_of[i] = left;
        slot_of[j] = right;
    }
    for (const auto& [label, idx] : slot_of) {
        REQUIRE(arena[static_cast<std::size_t>(idx)].left < 0);
        arena[static_cast<std::size_t>(idx)].leaf = label;
        arena[static_cast<std::size_t>(idx)].is_leaf = true;
    }

    TreeBuilder b;
    std::function<int(int)> convert = [&](int id) -> int {
        const Slot& slot = arena[static_cast<std::size_t>(id)];
        if (slot.left < 0) {
            REQUIRE(slot.is_leaf);
            return b.add_leaf(slot.leaf);
        }
        int l = convert(slot.left);
        int r = convert(slot.right);
        return b.add_internal(l, r);
    };
    return LabeledTree::from_builder(b, b.add_leaf(Label::b()), convert(0));
}

}  // namespace

TEST_CASE("parking function literals") {
    ParkingFunction p = pf("3;-;1;2,4");
    CHECK(p.size() == 4);
    CHECK(p.heights() == comp("1,0,1,2"));
    CHECK(p.column_of(1) == 3);
    CHECK(p.column_of(4) == 4);
    CHECK(p.top_of_column(4) == 4);
    CHECK(p.to_string() == "3;-;1;2,4");
    CHECK(pf("").size() == 0);
    CHECK(ParkingFunction() == pf(""));
}

TEST_CASE("validation rejects bad column data") {
    CHECK_THROWS_AS(pf("1;1"), std::invalid_argument);       // duplicate car
    CHECK_THROWS_AS(pf("3;-"), std::invalid_argument);       // car out of range
    CHECK_THROWS_AS(pf("1,2;-"), std::invalid_argument);     // violates the Dyck bound
    CHECK_THROWS_AS(pf("-;x"), std::invalid_argument);
    CHECK_THROWS_AS(ParkingFunction::from_columns({{1}, {1}}), std::invalid_argument);
}

TEST_CASE("dominance indices") {
    // restricted: every car dominates fewer columns than its value
    std::vector<int> d = dominance(pf("3;-;1;2,4"));
    CHECK(d == std::vector<int>{0, 0, 2, 0});
    CHECK(is_column_restricted(pf("3;-;1;2,4")));

    // not restricted: car 2 dominates the empty column and the column of 1
    ParkingFunction bad = pf("2;-;1;3,4");
    CHECK(dominance(bad)[1] == 2);
    CHECK_FALSE(is_column_restricted(bad));

    CHECK(is_column_restricted(pf("1")));
}

TEST_CASE("a car in the last column dominates nothing") {
    for (int n = 1; n <= 4; ++n) {
        for_each_composition(n, [&](const Composition& k) {
            parking_functions_with_heights(k, [&](const ParkingFunction& p) {
                if (p.columns().back().empty()) return;
                for (int car : p.columns().back())
                    CHECK(dominance(p)[static_cast<std::size_t>(car) - 1] == 0);
            });
        });
    }
}

TEST_CASE("cpf enumeration") {
    auto cpfs = collect_cpf_set(comp("1,0,1,2"));
    bool found = false;
    for (const auto& p : cpfs)
        if (p == pf("3;-;1;2,4")) found = true;
    CHECK(found);

    CHECK(collect_cpf_set(comp("0,2")).size() == 1);
    CHECK(collect_cpf_set(comp("2,0")).empty());  // Dyck-invalid heights
    CHECK(collect_cpf_set(comp("1,1")).size() == 2);

    std::uint64_t total = 0;
    for_each_composition(5, [&](const Composition& k) { total += cpf_count(k); });
    CHECK(BigUint(total) == odd_double_factorial(5));

    CHECK_THROWS_AS(cpf_count(Composition({2, 1})), std::invalid_argument);
}

TEST_CASE("reduction drops the right column") {
    // car 1 alone in its column: that column disappears
    CHECK(r_map(pf("3;-;1;2,4")) == pf("2;-;1,3"));
    // car 1 sharing a column: the rightmost empty column disappears
    CHECK(r_map(pf("-;1,2")) == pf("1"));
    CHECK(r_map(pf("1")) == pf(""));
    CHECK_THROWS_AS(r_map(pf("")), std::invalid_argument);
}

TEST_CASE("reduction stays inside parking functions") {
    for (int n = 1; n <= 5; ++n) {
        for_each_composition(n, [&](const Composition& k) {
            parking_functions_with_heights(k, [&](const ParkingFunction& p) {
                ParkingFunction reduced = r_map(p);
                CHECK(reduced.size() == n - 1);
            });
        });
    }
}

TEST_CASE("tau on the example tree") {
    CHECK(tau(LabeledTree::parse("(a,b,((c,1),((2,3),4)))")) == pf("3;-;1;2,4"));
    CHECK(tau(LabeledTree::star()) == pf(""));
    CHECK_THROWS_AS(tau(LabeledTree::parse("(a,1,(b,c))")), std::invalid_argument);
}

TEST_CASE("tau_inverse on the example parking function") {
    CHECK(tau_inverse(pf("3;-;1;2,4")) == LabeledTree::parse("(a,b,((c,1),((2,3),4)))"));
    CHECK(tau_inverse(pf("")) == LabeledTree::star());
}

TEST_CASE("tau_inverse rejects non-restricted input") {
    CHECK_THROWS_AS(tau_inverse(pf("2;-;1;3,4")), std::invalid_argument);
    CHECK_THROWS_AS(tau_inverse(pf("1;-;2,3")), std::invalid_argument);
}

TEST_CASE("tau is a bijection onto the restricted parking functions") {
    for (int n = 0; n <= 4; ++n) {
        std::set<std::string> images;
        std::uint64_t trees = 0;
        enumerate_trees(n, true, [&](const LabeledTree& t) {
            ++trees;
            ParkingFunction p = tau(t);
            CHECK(is_column_restricted(p));
            CHECK(p.heights() == classify(t));
            CHECK(tau_inverse(p) == t);
            images.insert(p.to_string());
        });
        CHECK(images.size() == trees);

        std::set<std::string> cpfs;
        for_each_composition(n, [&](const Composition& k) {
            cpf_set(k, [&](const ParkingFunction& p) { cpfs.insert(p.to_string()); });
        });
        CHECK(images == cpfs);
    }
}

TEST_CASE("top-down reconstruction agrees with merge-extend") {
    for (int n = 0; n <= 5; ++n) {
        for_each_composition(n, [&](const Composition& k) {
            cpf_set(k, [&](const ParkingFunction& p) {
                CHECK(reverse_reconstruct(p) == tau_inverse(p));
            });
        });
    }
}

TEST_CASE("reduction preserves restriction when car 1 dominates nothing") {
    for (int n = 1; n <= 4; ++n) {
        for_each_composition(n, [&](const Composition& k) {
            parking_functions_with_heights(k, [&](const ParkingFunction& p) {
                if (dominance(p)[0] != 0) return;
                CHECK(is_column_restricted(p) == is_column_restricted(r_map(p)));
            });
        });
    }
}
