// Acceptance suite: runs each acceptance criterion exactly and prints one
// pass/fail line per criterion.  Exit status 0 only when every criterion
// holds.

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kapdeg/kapranov.hpp"
#include "kapdeg/multidegree.hpp"
#include "kapdeg/parking.hpp"
#include "kapdeg/tournament.hpp"
#include "kapdeg/verify.hpp"

using namespace kapdeg;

namespace {

constexpr int kNMax = 6;

bool all_passed = true;

void report(int id, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << id << " (" << name << "): " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) all_passed = false;
}

Composition comp(const char* text) { return Composition::parse(text); }

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
    std::map<int, std::map<Composition, std::uint64_t>> census;
    for (int n = 0; n <= kNMax; ++n) census[n] = tour_census(n, 2);

    // 1. total-degree identity, exact
    {
        const std::uint64_t expected[] = {1, 3, 15, 105, 945, 10395};
        bool pass = true;
        std::string detail;
        for (int n = 1; n <= kNMax; ++n) {
            std::uint64_t want = expected[n - 1];
            std::uint64_t trees = 0;
            for (const auto& [k, count] : census[n]) trees += count;
            std::uint64_t cpfs = 0;
            for_each_composition(n, [&](const Composition& k) { cpfs += cpf_count(k); });
            if (total_degree(n) != BigUint(want) || trees != want || cpfs != want) {
                pass = false;
                detail = "n=" + std::to_string(n);
                break;
            }
        }
        report(1, "total-degree identity", pass, detail);
    }

    // 2. triple agreement for every composition
    {
        bool pass = true;
        std::string detail;
        for (int n = 0; n <= kNMax && pass; ++n) {
            for_each_composition(n, [&](const Composition& k) {
                auto it = census[n].find(k);
                std::uint64_t tours = it == census[n].end() ? 0 : it->second;
                if (tours != cpf_count(k) || BigUint(tours) != multidegree(k)) {
                    pass = false;
                    detail = "k=" + k.to_string();
                }
            });
        }
        report(2, "triple agreement", pass, detail);
    }

    // 3. pinned values
    {
        bool pass = multidegree(comp("1,1")) == BigUint(2) &&
                    multidegree(comp("0,2")) == BigUint(1) &&
                    multidegree(comp("2,0")) == BigUint(0);

        LabeledTree example = LabeledTree::parse("(a,b,((c,1),((2,3),4)))");
        pass = pass && tau(example).to_string() == "3;-;1;2,4";

        std::set<std::string> embeddings;
        for (const LabeledTree& t : collect_tour_set(comp("1,1"))) {
            EmbeddingCoordinates e = embed_boundary(t);
            embeddings.insert(e.factors[0].to_string() + "x" + e.factors[1].to_string());
        }
        pass = pass && embeddings == std::set<std::string>{"[0:1]x[0:1:0]", "[0:1]x[0:1:1]"};

        LabeledTree six = LabeledTree::parse("(a,b,((1,3),(5,(c,(2,4)))))");
        pass = pass && boundary_factor_coords(six, 5).to_string() == "[0:1:0:1:0:1]";

        report(3, "pinned values", pass);
    }

    // 4. bijection roundtrips and the commuting square
    {
        bool pass = true;
        std::string detail;
        for (int n = 0; n <= kNMax && pass; ++n) {
            enumerate_trees(n, true, [&](const LabeledTree& t) {
                if (!pass) return;
                ParkingFunction p = tau(t);
                if (tau_inverse(p) != t) {
                    pass = false;
                    detail = "tau roundtrip at " + t.to_string();
                    return;
                }
                if (n >= 1) {
                    Composition k = classify(t);
                    auto [reduced, j] = pi_lazy(t);
                    if (pi_lazy_inverse(reduced, j, k) != t) {
                        pass = false;
                        detail = "pi_lazy roundtrip at " + t.to_string();
                        return;
                    }
                    if (r_map(p) != tau(reduced)) {
                        pass = false;
                        detail = "commuting square at " + t.to_string();
                    }
                }
            });
        }
        report(4, "bijection roundtrips", pass, detail);
    }

    // 5. structural lemmas
    {
        bool pass = true;
        std::string detail;
        for (int n = 0; n <= kNMax && pass; ++n) {
            enumerate_trees(n, false, [&](const LabeledTree& t) {
                if (!pass) return;
                Transcript tr = run_tournament(t);
                std::set<Label> winners, losers;
                for (std::size_t i = 0; i < tr.rounds().size(); ++i) {
                    const Round& r = tr.rounds()[i];
                    if (i > 0 && tr.rounds()[i - 1].loser < r.loser) pass = false;
                    winners.insert(r.winner);
                    losers.insert(r.loser);
                }
                for (Label w : winners)
                    if (losers.count(w)) pass = false;
                if (!pass) detail = "loser/winner structure at " + t.to_string();
            });
            enumerate_trees(n, true, [&](const LabeledTree& t) {
                if (!pass) return;
                Transcript tr = run_tournament(t);
                if (tr.competes(Label::a()) || tr.competes(Label::b())) pass = false;
                if (n >= 1) {
                    if (!tr.competes(Label::c())) pass = false;
                    for (int i = 1; i <= n; ++i)
                        if (!tr.competes(Label::num(i))) pass = false;
                    Composition k = tr.win_counts();
                    RightmostZero rz = rightmost_zero(k);
                    const Round& first = tr.rounds().front();
                    if (first.loser != (rz.is_c ? Label::c() : Label::num(rz.index)))
                        pass = false;
                    if (first.lazy != (tr.wins_of(first.winner) == 1 && n >= 2)) pass = false;
                }
                if (!pass) detail = "first-round structure at " + t.to_string();
            });
            if (n >= 1 && pass) {
                for_each_composition(n, [&](const Composition& k) {
                    RightmostZero rz = rightmost_zero(k);
                    std::uint64_t sum = 0;
                    for (int j = rz.is_c ? 1 : rz.index + 1; j <= n; ++j) {
                        auto it = census[n - 1].find(ktilde(k, j));
                        if (it != census[n - 1].end()) sum += it->second;
                    }
                    auto it = census[n].find(k);
                    std::uint64_t direct = it == census[n].end() ? 0 : it->second;
                    if (sum != direct) {
                        pass = false;
                        detail = "recursion at k=" + k.to_string();
                    }
                });
            }
        }
        report(5, "structural lemmas", pass, detail);
    }

    // 6. hyperplane containment
    {
        bool pass = true;
        std::string detail;
        for (int n = 1; n <= kNMax && pass; ++n) {
            for_each_composition(n, [&](const Composition& k) {
                HyperplaneReport r = verify_hyperplanes(k);
                if (!r.pass && pass) {
                    pass = false;
                    detail = "k=" + k.to_string() + " " + r.detail;
                }
            });
        }
        report(6, "hyperplane containment", pass, detail);
    }

    // 7. support characterization up to n = 7
    {
        bool pass = true;
        std::string detail;
        for (int n = 0; n <= 7 && pass; ++n) {
            for_each_composition(n, [&](const Composition& k) {
                if (is_support(k) != !multidegree(k).is_zero()) {
                    pass = false;
                    detail = "k=" + k.to_string();
                }
            });
        }
        report(7, "support characterization", pass, detail);
    }

    // 8. performance envelope
    {
        auto start_verify = std::chrono::steady_clock::now();
        VerifyReport full = run_verification(kNMax, "all", 2);
        double verify_seconds = seconds_since(start_verify);

        auto start_census = std::chrono::steady_clock::now();
        auto census8 = tour_census(8, 4);
        double census_seconds = seconds_since(start_census);
        std::uint64_t census8_total = 0;
        for (const auto& [k, count] : census8) census8_total += count;

        bool pass = full.pass && verify_seconds < 1800.0 && census_seconds < 600.0 &&
                    census8_total == 2027025;
        report(8, "performance envelope", pass,
               "verify_all_n6=" + std::to_string(verify_seconds) + "s, census_n8_4workers=" +
                   std::to_string(census_seconds) + "s");
    }

    std::cout << (all_passed ? "acceptance: all criteria passed"
                             : "acceptance: some criteria FAILED")
              << std::endl;
    return all_passed ? 0 : 1;
}
