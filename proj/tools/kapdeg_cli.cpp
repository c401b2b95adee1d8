// Command-line front end: enumeration, multidegree tables, tournament
// classification, the tree/parking bijections, exact embedding coordinates,
// and the exhaustive verification suites.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
// 3 resource bound exceeded.

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kapdeg/kapranov.hpp"
#include "kapdeg/multidegree.hpp"
#include "kapdeg/parking.hpp"
#include "kapdeg/tournament.hpp"
#include "kapdeg/verify.hpp"

using nlohmann::ordered_json;

namespace {

ordered_json transcript_json(const kapdeg::Transcript& tr) {
    ordered_json out;
    out["tree"] = tr.tree().to_string();
    out["rounds"] = ordered_json::array();
    for (const kapdeg::Round& r : tr.rounds()) {
        ordered_json round;
        round["loser"] = r.loser.to_string();
        round["winner"] = r.winner.to_string();
        round["advancer"] = r.advancer.to_string();
        round["lazy"] = r.lazy;
        out["rounds"].push_back(std::move(round));
    }
    out["win_counts"] = tr.win_counts().parts();
    return out;
}

int run_enumerate(int n, const std::string& k_text, const std::string& format) {
    std::uint64_t count = 0;
    auto emit = [&](const kapdeg::LabeledTree& t) {
        ++count;
        if (format == "json") {
            ordered_json line;
            line["tree"] = t.to_string();
            std::cout << line.dump() << "\n";
        } else {
            std::cout << t.to_string() << "\n";
        }
    };
    if (!k_text.empty()) {
        kapdeg::Composition k = kapdeg::Composition::parse(k_text);
        if (n >= 0 && n != k.length())
            throw std::invalid_argument("--n disagrees with the length of --k");
        kapdeg::tour_set(k, emit);
    } else {
        if (n < 0) throw std::invalid_argument("--n or --k is required");
        kapdeg::enumerate_trees(n, true, emit);
    }
    std::cerr << "count: " << count << "\n";
    return 0;
}

int run_multidegree(int n, const std::string& k_text, const std::string& format) {
    if (!k_text.empty()) {
        kapdeg::Composition k = kapdeg::Composition::parse(k_text);
        std::cout << kapdeg::multidegree(k).to_decimal() << "\n";
        return 0;
    }
    if (n < 0) throw std::invalid_argument("--n or --k is required");
    kapdeg::BigUint total;
    if (format == "json") {
        ordered_json table;
        table["n"] = n;
        table["multidegrees"] = ordered_json::object();
        kapdeg::for_each_composition(n, [&](const kapdeg::Composition& k) {
            kapdeg::BigUint deg = kapdeg::multidegree(k);
            total += deg;
            table["multidegrees"][k.to_string()] = deg.to_decimal();
        });
        table["total"] = total.to_decimal();
        std::cout << table.dump(2) << "\n";
    } else {
        // CSV: `;` joins composition parts inside the field, `,` splits fields
        std::cout << "k,multidegree\n";
        kapdeg::for_each_composition(n, [&](const kapdeg::Composition& k) {
            kapdeg::BigUint deg = kapdeg::multidegree(k);
            total += deg;
            std::string parts = k.to_string();
            for (char& ch : parts)
                if (ch == ',') ch = ';';
            std::cout << parts << "," << deg.to_decimal() << "\n";
        });
        std::cout << "total," << total.to_decimal() << "\n";
    }
    return 0;
}

int run_classify(const std::string& tree_text, bool as_json) {
    kapdeg::LabeledTree t = kapdeg::LabeledTree::parse(tree_text);
    if (as_json) {
        std::cout << transcript_json(kapdeg::run_tournament(t)).dump(2) << "\n";
        return 0;
    }
    std::cout << kapdeg::classify(t).to_string() << "\n";
    return 0;
}

int run_bijection(const std::string& direction, const std::string& input,
                  const std::string& format) {
    if (direction == "to-pf") {
        kapdeg::LabeledTree t = kapdeg::LabeledTree::parse(input);
        kapdeg::ParkingFunction p = kapdeg::tau(t);
        if (format == "json")
            std::cout << ordered_json(p.columns()).dump() << "\n";
        else
            std::cout << p.to_string() << "\n";
        return 0;
    }
    if (direction == "to-tree") {
        kapdeg::ParkingFunction p = kapdeg::ParkingFunction::parse(input);
        kapdeg::LabeledTree t = kapdeg::tau_inverse(p);
        if (format == "json")
            std::cout << ordered_json{{"tree", t.to_string()}}.dump() << "\n";
        else
            std::cout << t.to_string() << "\n";
        return 0;
    }
    throw std::invalid_argument("direction must be to-pf or to-tree");
}

int run_coords(const std::string& tree_text, const std::string& points_text, int factor,
               const std::string& format) {
    std::vector<kapdeg::FactorCoordinates> factors;
    ordered_json meta;
    if (!tree_text.empty()) {
        kapdeg::LabeledTree t = kapdeg::LabeledTree::parse(tree_text);
        meta["tree"] = t.to_string();
        if (factor > 0) {
            factors.push_back(kapdeg::boundary_factor_coords(t, factor));
        } else {
            factors = kapdeg::embed_boundary(t).factors;
        }
    } else if (!points_text.empty()) {
        kapdeg::InteriorConfiguration cfg = kapdeg::InteriorConfiguration::parse(points_text);
        int n = cfg.max_numeric();
        if (factor > 0) {
            factors.push_back(kapdeg::embed_interior(cfg, factor));
        } else {
            for (int r = 1; r <= n; ++r) factors.push_back(kapdeg::embed_interior(cfg, r));
        }
    } else {
        throw std::invalid_argument("--tree or --points is required");
    }

    if (format == "csv") {
        // one row per factor: the index r, then the r+1 coordinates
        for (const auto& fc : factors) {
            std::cout << fc.factor;
            for (const auto& value : fc.to_strings()) std::cout << "," << value;
            std::cout << "\n";
        }
    } else {
        ordered_json out = meta;
        out["factors"] = ordered_json::array();
        for (const auto& fc : factors) out["factors"].push_back(fc.to_strings());
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int run_verify(int n_max, const std::string& suite, int jobs) {
    kapdeg::VerifyReport report = kapdeg::run_verification(n_max, suite, jobs);
    std::cout << report.json.dump(2) << "\n";
    return report.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multidegrees of the iterated Kapranov embedding"};
    app.require_subcommand(1);

    int n = -1, factor = -1, n_max = -1, jobs = 1;
    std::string k_text, format = "text", tree_text, points_text, direction, input,
                suite = "all";
    bool as_json = false;

    CLI::App* enumerate = app.add_subcommand("enumerate", "list ab-adjacent trees or Tour(k)");
    enumerate->add_option("--n", n, "tree size parameter");
    enumerate->add_option("--k", k_text, "composition, comma-joined parts");
    enumerate->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* mdeg = app.add_subcommand("multidegree", "multidegree value or full table");
    mdeg->add_option("--n", n, "table over all compositions of n");
    mdeg->add_option("--k", k_text, "composition, comma-joined parts");
    mdeg->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json", "text"}));

    CLI::App* cls = app.add_subcommand("classify", "win counts of a tree's tournament");
    cls->add_option("tree", tree_text, "tree literal")->required();
    cls->add_flag("--json", as_json, "emit the full transcript as JSON");

    CLI::App* bij = app.add_subcommand("bijection", "convert between trees and parking functions");
    bij->add_option("direction", direction, "to-pf or to-tree")->required();
    bij->add_option("input", input, "tree or parking function literal")->required();
    bij->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* coords = app.add_subcommand("coords", "exact embedding coordinates");
    coords->add_option("--tree", tree_text, "boundary point as a tree literal");
    coords->add_option("--points", points_text,
                       "interior marked points, e.g. a=0,b=1,c=2,1=7/2,2=inf");
    coords->add_option("--factor", factor, "restrict to one projective factor");
    coords->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    CLI::App* verify = app.add_subcommand("verify", "run the exhaustive property suites");
    verify->add_option("--n-max", n_max, "largest size to verify")->required();
    verify->add_option("--suite", suite, "all, counts, bijection, hyperplanes or lemmas");
    verify->add_option("--jobs", jobs, "worker threads for enumeration-heavy suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(n, k_text, format);
        if (mdeg->parsed())
            return run_multidegree(n, k_text, format == "text" ? "csv" : format);
        if (cls->parsed()) return run_classify(tree_text, as_json);
        if (bij->parsed()) return run_bijection(direction, input, format);
        if (coords->parsed())
            return run_coords(tree_text, points_text, factor,
                              format == "text" ? "json" : format);
        if (verify->parsed()) return run_verify(n_max, suite, jobs);
    } catch (const kapdeg::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
