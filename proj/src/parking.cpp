#include "kapdeg/parking.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kapdeg {

ParkingFunction ParkingFunction::from_columns(std::vector<std::vector<int>> columns) {
    int n = static_cast<int>(columns.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int total = 0, prefix = 0;
    for (int i = 0; i < n; ++i) {
        auto& column = columns[static_cast<std::size_t>(i)];
        std::sort(column.begin(), column.end());
        for (int car : column) {
            if (car < 1 || car > n || seen[static_cast<std::size_t>(car)])
                throw std::invalid_argument("cars must be 1..n, each exactly once");
            seen[static_cast<std::size_t>(car)] = 1;
            ++total;
        }
        prefix += static_cast<int>(column.size());
        if (prefix > i + 1)
            throw std::invalid_argument("column heights violate the Dyck condition");
    }
    if (total != n) throw std::invalid_argument("cars must be 1..n, each exactly once");
    ParkingFunction out;
    out.columns_ = std::move(columns);
    return out;
}

ParkingFunction ParkingFunction::parse(std::string_view text) {
    if (text.empty()) return ParkingFunction();
    std::vector<std::vector<int>> columns;
    std::size_t pos = 0;
    while (true) {
        std::size_t semi = text.find(';', pos);
        std::string_view field = text.substr(
            pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
        std::vector<int> column;
        if (field != "-") {
            std::size_t fpos = 0;
            while (fpos <= field.size()) {
                std::size_t comma = field.find(',', fpos);
                std::string_view token = field.substr(
                    fpos, comma == std::string_view::npos ? std::string_view::npos
                                                          : comma - fpos);
                if (token.empty())
                    throw std::invalid_argument("empty entry in parking function literal");
                int value = 0;
                for (char ch : token) {
                    if (ch < '0' || ch > '9')
                        throw std::invalid_argument("bad car label: " + std::string(token));
                    value = value * 10 + (ch - '0');
                    if (value > 1'000'000)
                        throw std::invalid_argument("car label too large");
                }
                column.push_back(value);
                if (comma == std::string_view::npos) break;
                fpos = comma + 1;
            }
        }
        columns.push_back(std::move(column));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    return from_columns(std::move(columns));
}

Composition ParkingFunction::heights() const {
    std::vector<int> parts;
    parts.reserve(columns_.size());
    for (const auto& column : columns_) parts.push_back(static_cast<int>(column.size()));
    return Composition(std::move(parts));
}

int ParkingFunction::column_of(int car) const {
    for (int i = 0; i < size(); ++i) {
        const auto& column = columns_[static_cast<std::size_t>(i)];
        if (std::find(column.begin(), column.end(), car) != column.end()) return i + 1;
    }
    throw std::invalid_argument("car not present");
}

int ParkingFunction::top_of_column(int column) const {
    const auto& entries = columns_.at(static_cast<std::size_t>(column) - 1);
    if (entries.empty()) throw std::invalid_argument("column is empty");
    return entries.back();
}

std::string ParkingFunction::to_string() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ";";
        const auto& column = columns_[static_cast<std::size_t>(i)];
        if (column.empty()) {
            out += "-";
            continue;
        }
        for (std::size_t c = 0; c < column.size(); ++c) {
            if (c) out += ",";
            out += std::to_string(column[c]);
        }
    }
    return out;
}

std::vector<int> dominance(const ParkingFunction& p) {
    int n = p.size();
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (int car = 1; car <= n; ++car) {
        int col = p.column_of(car);
        for (int right = col + 1; right <= n; ++right) {
            const auto& entries = p.columns()[static_cast<std::size_t>(right) - 1];
            if (entries.empty() || entries.back() < car)
                ++d[static_cast<std::size_t>(car) - 1];
        }
    }
    return d;
}

bool is_column_restricted(const ParkingFunction& p) {
    std::vector<int> d = dominance(p);
    for (int car = 1; car <= p.size(); ++car)
        if (car <= d[static_cast<std::size_t>(car) - 1]) return false;
    return true;
}

namespace {

void assign_cars(std::vector<std::vector<int>>& columns, const Composition& k, int car,
                 const ParkingVisitor& visit) {
    int n = k.length();
    if (car > n) {
        visit(ParkingFunction::from_columns(columns));
        return;
    }
    for (int col = 1; col <= n; ++col) {
        auto& entries = columns[static_cast<std::size_t>(col) - 1];
        if (static_cast<int>(entries.size()) >= k.part(col)) continue;
        entries.push_back(car);
        assign_cars(columns, k, car + 1, visit);
        entries.pop_back();
    }
}

}  // namespace

void parking_functions_with_heights(const Composition& k, const ParkingVisitor& visit) {
    if (!k.is_weak_of_length())
        throw std::invalid_argument("heights must form a weak composition of n into n parts");
    int prefix = 0;
    for (int i = 1; i <= k.length(); ++i) {
        prefix += k.part(i);
        if (prefix > i) return;  // no parking function has these heights
    }
    std::vector<std::vector<int>> columns(static_cast<std::size_t>(k.length()));
    assign_cars(columns, k, 1, visit);
}

void cpf_set(const Composition& k, const ParkingVisitor& visit) {
    parking_functions_with_heights(k, [&](const ParkingFunction& p) {
        if (is_column_restricted(p)) visit(p);
    });
}

std::vector<ParkingFunction> collect_cpf_set(const Composition& k) {
    std::vector<ParkingFunction> out;
    cpf_set(k, [&](const ParkingFunction& p) { out.push_back(p); });
    return out;
}

std::uint64_t cpf_count(const Composition& k) {
    std::uint64_t count = 0;
    cpf_set(k, [&](const ParkingFunction&) { ++count; });
    return count;
}

ParkingFunction r_map(const ParkingFunction& p) {
    if (p.size() < 1) throw std::invalid_argument("cannot reduce an empty parking function");
    std::vector<std::vector<int>> columns = p.columns();
    int col1 = p.column_of(1);
    auto& entries = columns[static_cast<std::size_t>(col1) - 1];
    entries.erase(std::find(entries.begin(), entries.end(), 1));
    for (auto& column : columns)
        for (int& car : column) --car;
    for (std::size_t i = columns.size(); i-- > 0;) {
        if (columns[i].empty()) {
            columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(i));
            return ParkingFunction::from_columns(std::move(columns));
        }
    }
    throw std::logic_error("reduced parking function has no empty column");
}

ParkingFunction tau(const LabeledTree& t) {
    if (!t.is_ab_adjacent())
        throw std::invalid_argument("tau needs the a and b leaf edges adjacent");
    if (!t.has_standard_labels())
        throw std::invalid_argument("tau needs labels {a,b,c,1..n}");
    Transcript tr = run_tournament(t);
    std::vector<std::vector<int>> columns(static_cast<std::size_t>(t.n()));
    for (const Round& round : tr.rounds()) {
        if (!round.winner.is_num())
            throw std::logic_error("round won by a non-numeric label on an ab-adjacent tree");
        columns[static_cast<std::size_t>(round.winner.number()) - 1].push_back(round.index);
    }
    return ParkingFunction::from_columns(std::move(columns));
}

LabeledTree tau_inverse(const ParkingFunction& p) {
    int n = p.size();
    if (n == 0) return LabeledTree::star();

    auto jam = [](const std::string& why) {
        throw std::invalid_argument("parking function is not column-restricted (" + why + ")");
    };

    // winners are the car-bearing columns; losers the empty ones plus c
    std::set<Label> losers{Label::c()};
    for (int col = 1; col <= n; ++col)
        if (p.columns()[static_cast<std::size_t>(col) - 1].empty())
            losers.insert(Label::num(col));

    TreeBuilder b;
    struct Component {
        int subtree;
        Label frontier;
    };
    std::vector<Component> components;
    std::map<Label, int> component_of;  // every label in {c,1..n}
    std::map<Label, int> frontier_of;   // current frontier labels only
    auto seed = [&](Label l) {
        int idx = static_cast<int>(components.size());
        components.push_back(Component{b.add_leaf(l), l});
        component_of[l] = idx;
        frontier_of[l] = idx;
    };
    seed(Label::c());
    for (int i = 1; i <= n; ++i) seed(Label::num(i));

    for (int car = 1; car <= n; ++car) {
        int jcol = p.column_of(car);
        Label j = Label::num(jcol);

        // largest loser whose edge still points at the root of its component
        Label loser;
        bool found = false;
        for (auto it = losers.rbegin(); it != losers.rend(); ++it) {
            if (frontier_of.count(*it)) {
                loser = *it;
                found = true;
                break;
            }
        }
        if (!found) jam("no available loser for car " + std::to_string(car));

        int ci = frontier_of.at(loser);
        int cj = component_of.at(j);
        if (ci == cj) jam("car " + std::to_string(car) + " would merge a tree with itself");
        if (components[static_cast<std::size_t>(cj)].frontier != j)
            jam("winner edge of column " + std::to_string(jcol) + " is buried");

        // laziness applies when the car tops its column, except for the final
        // car: the last merge labels the root edge by the winner (the same
        // corner the roundtrip tests pin down)
        bool lazy = car == p.top_of_column(jcol) && car != n;
        int merged = b.add_internal(components[static_cast<std::size_t>(ci)].subtree,
                                    components[static_cast<std::size_t>(cj)].subtree);
        int idx = static_cast<int>(components.size());
        components.push_back(Component{merged, lazy ? loser : j});
        for (auto& [label, comp] : component_of)
            if (comp == ci || comp == cj) comp = idx;
        frontier_of.erase(loser);
        frontier_of.erase(j);
        frontier_of[lazy ? loser : j] = idx;
    }

    int final_comp = component_of.at(Label::c());
    for (const auto& [label, comp] : component_of)
        if (comp != final_comp) jam("forest did not merge into one tree");

    LabeledTree result = LabeledTree::from_builder(
        b, b.add_leaf(Label::b()), components[static_cast<std::size_t>(final_comp)].subtree);
    if (tau(result) != p) jam("reconstruction does not reproduce the input");
    return result;
}

}  // namespace kapdeg
