#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kapdeg/composition.hpp"
#include "kapdeg/tournament.hpp"
#include "kapdeg/tree.hpp"

namespace kapdeg {

// A parking function of size n over the up-left Dyck convention: cars 1..n
// distributed over n columns, read bottom-to-top in increasing order, with
// every prefix of column heights bounded by its index (equivalently every
// suffix sums to at least its length).
class ParkingFunction {
public:
    ParkingFunction() = default;
    static ParkingFunction from_columns(std::vector<std::vector<int>> columns);

    // Text format: semicolon-separated columns, comma-joined increasing
    // entries, `-` for an empty column.  "3;-;1;2,4".  Empty text is n = 0.
    static ParkingFunction parse(std::string_view text);

    int size() const { return static_cast<int>(columns_.size()); }
    const std::vector<std::vector<int>>& columns() const { return columns_; }
    Composition heights() const;
    int column_of(int car) const;  // 1-based column index
    int top_of_column(int column) const;

    std::string to_string() const;

    friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
    friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;

private:
    std::vector<std::vector<int>> columns_;
};

// Dominance index of every car: d_x counts the columns strictly right of x's
// column whose entries are all smaller than x (empty columns included).
// Index 0 holds d_1.
std::vector<int> dominance(const ParkingFunction& p);

// Column-restricted: x > d_x for every car x.
bool is_column_restricted(const ParkingFunction& p);

using ParkingVisitor = std::function<void(const ParkingFunction&)>;

// Streams CPF(k), the column-restricted parking functions with column
// heights k, in a deterministic order.  Heights violating the Dyck condition
// yield an empty stream.
void cpf_set(const Composition& k, const ParkingVisitor& visit);
std::vector<ParkingFunction> collect_cpf_set(const Composition& k);
std::uint64_t cpf_count(const Composition& k);

// Streams every parking function with heights k, restricted or not.
void parking_functions_with_heights(const Composition& k, const ParkingVisitor& visit);

// Reduction step: removes the row of car 1, decrements the remaining labels,
// deletes the rightmost empty column.
ParkingFunction r_map(const ParkingFunction& p);

// The tournament-to-parking bijection: car m sits in column j exactly when
// j wins round m.  Requires an ab-adjacent tree; lands in CPF(classify(t)).
ParkingFunction tau(const LabeledTree& t);

// Inverse bijection via the merge/extend reconstruction.  Inputs that are
// not column-restricted jam the reconstruction and are rejected.
LabeledTree tau_inverse(const ParkingFunction& p);

}  // namespace kapdeg
