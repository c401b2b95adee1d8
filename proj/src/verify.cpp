#include "kapdeg/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "kapdeg/kapranov.hpp"
#include "kapdeg/multidegree.hpp"
#include "kapdeg/parking.hpp"
#include "kapdeg/tournament.hpp"

namespace kapdeg {

namespace {

BigUint odd_double_factorial(int n) {
    BigUint out(1);
    for (int m = 3; m <= 2 * n - 1; m += 2) out *= BigUint(static_cast<std::uint64_t>(m));
    return out;
}

void add_check(SuiteResult& suite, const std::string& name, int n, bool pass,
               const std::string& detail = "") {
    nlohmann::ordered_json check;
    check["name"] = name;
    check["n"] = n;
    check["pass"] = pass;
    if (!detail.empty()) check["detail"] = detail;
    suite.checks.push_back(std::move(check));
    if (!pass) suite.pass = false;
}

std::vector<int> subtree_ids(const LabeledTree& t, int root) {
    std::vector<int> out, stack{root};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        out.push_back(id);
        const auto& nd = t.nodes()[static_cast<std::size_t>(id)];
        if (!nd.is_leaf()) {
            stack.push_back(nd.left);
            stack.push_back(nd.right);
        }
    }
    return out;
}

std::vector<int> parents_of(const LabeledTree& t) {
    std::vector<int> parent(t.nodes().size(), -1);
    for (int i = 0; i < static_cast<int>(t.nodes().size()); ++i) {
        const auto& nd = t.nodes()[static_cast<std::size_t>(i)];
        if (!nd.is_leaf()) {
            parent[static_cast<std::size_t>(nd.left)] = i;
            parent[static_cast<std::size_t>(nd.right)] = i;
        }
    }
    return parent;
}

bool losers_weakly_decrease(const Transcript& tr) {
    for (std::size_t i = 1; i < tr.rounds().size(); ++i)
        if (tr.rounds()[i - 1].loser < tr.rounds()[i].loser) return false;
    return true;
}

bool winners_losers_disjoint(const Transcript& tr) {
    std::set<Label> winners, losers;
    for (const Round& r : tr.rounds()) {
        winners.insert(r.winner);
        losers.insert(r.loser);
    }
    for (Label w : winners)
        if (losers.count(w)) return false;
    return true;
}

// When the smallest label of an a-free branch first competes, every branch
// edge off its path to the branching vertex is already labeled.
bool branch_path_holds(const LabeledTree& t, const Transcript& tr) {
    const auto& nodes = t.nodes();
    std::vector<int> parent = parents_of(t);
    std::vector<int> labeled_at(nodes.size(), 0);  // 0 = labeled before round 1
    for (const Round& r : tr.rounds())
        labeled_at[static_cast<std::size_t>(r.labeled_edge)] = r.index;
    std::map<Label, int> first_competes;
    for (const Round& r : tr.rounds()) {
        first_competes.emplace(r.loser, r.index);
        first_competes.emplace(r.winner, r.index);
    }
    for (int p = 0; p < static_cast<int>(nodes.size()); ++p) {
        if (nodes[static_cast<std::size_t>(p)].is_leaf()) continue;
        for (int child : {nodes[static_cast<std::size_t>(p)].left,
                          nodes[static_cast<std::size_t>(p)].right}) {
            std::vector<int> branch = subtree_ids(t, child);
            Label min_label = Label::num(1'000'000);
            int min_leaf = -1;
            for (int id : branch) {
                const auto& nd = nodes[static_cast<std::size_t>(id)];
                if (nd.is_leaf() && nd.label < min_label) {
                    min_label = nd.label;
                    min_leaf = id;
                }
            }
            auto it = first_competes.find(min_label);
            if (it == first_competes.end()) {
                if (branch.size() != 1) return false;  // only a lone b never competes
                continue;
            }
            int rho = it->second;
            std::set<int> path;
            for (int cur = min_leaf;; cur = parent[static_cast<std::size_t>(cur)]) {
                path.insert(cur);
                if (cur == child) break;
            }
            for (int id : branch)
                if (!path.count(id) && labeled_at[static_cast<std::size_t>(id)] >= rho)
                    return false;
        }
    }
    return true;
}

// Winners separating a label from a after forgetting still separate in the
// full tree.
bool separation_holds(const LabeledTree& t, const Transcript& tr) {
    int n = t.n();
    std::vector<LabeledTree> chain{t};  // chain[m] = t with labels above n-m forgotten
    for (int m = n; m > 1; --m) chain.push_back(chain.back().forget(Label::num(m)));
    // chain[n - r] has labels {a,b,c,1..r}
    for (int r = 1; r <= n; ++r) {
        if (tr.wins_of(Label::num(r)) == 0) continue;
        const LabeledTree& reduced = chain[static_cast<std::size_t>(n - r)];
        BranchView after = reduced.branches_at(Label::num(r));
        BranchView before = t.branches_at(Label::num(r));
        const auto& after_a = after.branch_containing(Label::a());
        const auto& before_a = before.branch_containing(Label::a());
        for (Label l : reduced.leaf_labels()) {
            if (l == Label::a() || l == Label::num(r)) continue;
            bool separated_after =
                std::find(after_a.begin(), after_a.end(), l) == after_a.end();
            bool separated_before =
                std::find(before_a.begin(), before_a.end(), l) == before_a.end();
            if (separated_after && !separated_before) return false;
        }
    }
    return true;
}

}  // namespace

SuiteResult verify_counts(int n_max, int jobs) {
    SuiteResult suite{"counts"};
    nlohmann::ordered_json totals = nlohmann::ordered_json::array();
    for (int n = 1; n <= n_max; ++n) {
        BigUint expected = odd_double_factorial(n);
        totals.push_back(expected.to_decimal());

        std::uint64_t all_trees = 0;
        enumerate_trees(n, false, [&](const LabeledTree&) { ++all_trees; });
        add_check(suite, "all_trees_count", n,
                  BigUint(all_trees) == odd_double_factorial(n + 1));

        auto census = tour_census(n, jobs);
        std::uint64_t ab_total = 0;
        for (const auto& [k, count] : census) ab_total += count;
        add_check(suite, "ab_trees_total", n, BigUint(ab_total) == expected);

        add_check(suite, "recursion_total", n, total_degree(n) == expected);

        std::uint64_t cpf_total = 0;
        bool agree = true;
        std::string mismatch;
        for_each_composition(n, [&](const Composition& k) {
            std::uint64_t cpfs = cpf_count(k);
            cpf_total += cpfs;
            auto it = census.find(k);
            std::uint64_t tours = it == census.end() ? 0 : it->second;
            if (agree && (BigUint(tours) != multidegree(k) || tours != cpfs)) {
                agree = false;
                mismatch = "k=" + k.to_string() + " tour=" + std::to_string(tours) +
                           " cpf=" + std::to_string(cpfs) +
                           " deg=" + multidegree(k).to_decimal();
            }
        });
        add_check(suite, "cpf_total", n, BigUint(cpf_total) == expected);
        add_check(suite, "triple_agreement", n, agree, mismatch);
    }
    suite.checks.push_back(nlohmann::ordered_json{{"name", "totals"}, {"values", totals}});
    return suite;
}

SuiteResult verify_bijections(int n_max) {
    SuiteResult suite{"bijection"};
    for (int n = 0; n <= n_max; ++n) {
        bool tau_round = true, pi_round = true, square = true, restricted = true;
        std::string bad_tree;
        std::set<std::string> images;
        std::uint64_t trees = 0;
        enumerate_trees(n, true, [&](const LabeledTree& t) {
            ++trees;
            Composition k = classify(t);
            ParkingFunction p = tau(t);
            if (!is_column_restricted(p) || p.heights() != k) restricted = false;
            images.insert(p.to_string());
            if (tau_inverse(p) != t) {
                tau_round = false;
                bad_tree = t.to_string();
            }
            if (n >= 1) {
                auto [reduced, j] = pi_lazy(t);
                if (classify(reduced) != ktilde(k, j.number()) ||
                    pi_lazy_inverse(reduced, j, k) != t) {
                    pi_round = false;
                    bad_tree = t.to_string();
                }
                if (r_map(p) != tau(reduced)) {
                    square = false;
                    bad_tree = t.to_string();
                }
            }
        });
        add_check(suite, "tau_roundtrip", n, tau_round, bad_tree);
        add_check(suite, "tau_lands_in_cpf", n, restricted);
        add_check(suite, "pi_lazy_roundtrip", n, pi_round, bad_tree);
        add_check(suite, "commuting_square", n, square, bad_tree);

        // image of tau is exactly the set of column-restricted parking functions
        std::set<std::string> cpfs;
        for_each_composition(n, [&](const Composition& k) {
            cpf_set(k, [&](const ParkingFunction& p) { cpfs.insert(p.to_string()); });
        });
        add_check(suite, "tau_image_is_cpf", n,
                  images == cpfs && images.size() == trees);

        // the other direction of the pi_lazy bijection, per target class
        if (n >= 1) {
            bool inverse_dir = true;
            std::map<Composition, std::vector<LabeledTree>> buckets;
            enumerate_trees(n - 1, true, [&](const LabeledTree& t) {
                buckets[classify(t)].push_back(t);
            });
            for_each_composition(n, [&](const Composition& k) {
                RightmostZero rz = rightmost_zero(k);
                for (int j = rz.is_c ? 1 : rz.index + 1; j <= n; ++j) {
                    auto it = buckets.find(ktilde(k, j));
                    if (it == buckets.end()) continue;
                    for (const LabeledTree& reduced : it->second) {
                        LabeledTree lifted = pi_lazy_inverse(reduced, Label::num(j), k);
                        auto [back, winner] = pi_lazy(lifted);
                        if (back != reduced || winner != Label::num(j)) inverse_dir = false;
                    }
                }
            });
            add_check(suite, "pi_lazy_inverse_section", n, inverse_dir);
        }

        // reduction preserves restriction both ways when car 1 dominates nothing
        if (n >= 1) {
            bool preserved = true;
            for_each_composition(n, [&](const Composition& k) {
                parking_functions_with_heights(k, [&](const ParkingFunction& p) {
                    if (dominance(p)[0] != 0) return;
                    if (is_column_restricted(p) != is_column_restricted(r_map(p)))
                        preserved = false;
                });
            });
            add_check(suite, "r_map_preserves_restriction", n, preserved);
        }
    }
    return suite;
}

SuiteResult verify_hyperplane_suite(int n_max) {
    SuiteResult suite{"hyperplanes"};
    for (int n = 1; n <= n_max; ++n) {
        bool pass = true;
        std::string detail;
        std::uint64_t checked = 0;
        for_each_composition(n, [&](const Composition& k) {
            HyperplaneReport report = verify_hyperplanes(k);
            checked += report.trees_checked;
            if (!report.pass && pass) {
                pass = false;
                detail = "k=" + k.to_string() + " tree=" + report.counterexample + " " +
                         report.detail;
            }
        });
        add_check(suite, "hyperplane_containment", n, pass,
                  pass ? "trees=" + std::to_string(checked) : detail);
    }
    return suite;
}

SuiteResult verify_lemmas(int n_max) {
    SuiteResult suite{"lemmas"};
    std::map<int, std::map<Composition, std::uint64_t>> census_by_n;
    for (int n = 0; n <= n_max; ++n) census_by_n[n] = tour_census(n, 1);

    for (int n = 0; n <= n_max; ++n) {
        bool losers = true, disjoint = true, round_count = true;
        std::string bad_tree;
        enumerate_trees(n, false, [&](const LabeledTree& t) {
            Transcript tr = run_tournament(t);
            if (static_cast<int>(tr.rounds().size()) != n) {
                round_count = false;
                bad_tree = t.to_string();
            }
            if (!losers_weakly_decrease(tr)) {
                losers = false;
                bad_tree = t.to_string();
            }
            if (!winners_losers_disjoint(tr)) {
                disjoint = false;
                bad_tree = t.to_string();
            }
        });
        add_check(suite, "round_count", n, round_count, bad_tree);
        add_check(suite, "losers_weakly_decrease", n, losers, bad_tree);
        add_check(suite, "winners_losers_disjoint", n, disjoint, bad_tree);

        bool participation = true, first_round = true, lazy_iff = true;
        bool separation = true, branch_path = true;
        enumerate_trees(n, true, [&](const LabeledTree& t) {
            Transcript tr = run_tournament(t);
            if (tr.competes(Label::a()) || tr.competes(Label::b())) participation = false;
            if (n >= 1) {
                if (!tr.competes(Label::c())) participation = false;
                for (int i = 1; i <= n; ++i)
                    if (!tr.competes(Label::num(i))) participation = false;

                Composition k = tr.win_counts();
                RightmostZero rz = rightmost_zero(k);
                Label expected_loser = rz.is_c ? Label::c() : Label::num(rz.index);
                const Round& first = tr.rounds().front();
                if (first.loser != expected_loser) first_round = false;
                bool expect_lazy = tr.wins_of(first.winner) == 1 && n >= 2;
                if (first.lazy != expect_lazy) lazy_iff = false;

                if (!separation_holds(t, tr)) separation = false;
            }
            if (!branch_path_holds(t, tr)) branch_path = false;
        });
        add_check(suite, "participation", n, participation);
        add_check(suite, "first_round_loser", n, first_round);
        add_check(suite, "first_round_laziness", n, lazy_iff);
        add_check(suite, "separation", n, separation);
        add_check(suite, "branch_path", n, branch_path);

        if (n >= 1) {
            bool recursion = true;
            std::string mismatch;
            const auto& census = census_by_n[n];
            const auto& smaller = census_by_n[n - 1];
            for_each_composition(n, [&](const Composition& k) {
                RightmostZero rz = rightmost_zero(k);
                std::uint64_t sum = 0;
                for (int j = rz.is_c ? 1 : rz.index + 1; j <= n; ++j) {
                    Composition kt = ktilde(k, j);
                    auto it = smaller.find(kt);
                    if (it != smaller.end()) sum += it->second;
                }
                auto it = census.find(k);
                std::uint64_t direct = it == census.end() ? 0 : it->second;
                if (sum != direct && recursion) {
                    recursion = false;
                    mismatch = "k=" + k.to_string();
                }
            });
            add_check(suite, "tour_recursion", n, recursion, mismatch);
        }
    }
    return suite;
}

VerifyReport run_verification(int n_max, const std::string& suite, int jobs) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    std::vector<SuiteResult> results;
    bool known = false;
    if (suite == "all" || suite == "counts") {
        results.push_back(verify_counts(n_max, jobs));
        known = true;
    }
    if (suite == "all" || suite == "bijection") {
        results.push_back(verify_bijections(n_max));
        known = true;
    }
    if (suite == "all" || suite == "hyperplanes") {
        results.push_back(verify_hyperplane_suite(n_max));
        known = true;
    }
    if (suite == "all" || suite == "lemmas") {
        results.push_back(verify_lemmas(n_max));
        known = true;
    }
    if (!known)
        throw std::invalid_argument(
            "unknown suite (expected all, counts, bijection, hyperplanes or lemmas)");

    VerifyReport report;
    report.json["n_max"] = n_max;
    report.json["suites"] = nlohmann::ordered_json::array();
    for (const SuiteResult& result : results) {
        nlohmann::ordered_json entry;
        entry["name"] = result.name;
        entry["pass"] = result.pass;
        entry["checks"] = result.checks;
        report.json["suites"].push_back(std::move(entry));
        if (!result.pass) report.pass = false;
    }
    report.json["pass"] = report.pass;
    return report;
}

}  // namespace kapdeg
