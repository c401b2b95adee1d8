#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kapdeg/composition.hpp"
#include "kapdeg/rational.hpp"
#include "kapdeg/tree.hpp"

namespace kapdeg {

// Projective coordinates of one P^r factor, indexed (z_b, z_c, z_1, ...,
// z_{r-1}), so r+1 entries.  Normal form: scaled so the first nonzero
// coordinate is 1, which makes equality and serialization canonical.
struct FactorCoordinates {
    int factor = 1;
    std::vector<Rational> coords;

    std::vector<std::string> to_strings() const;
    std::string to_string() const;  // "[0:1:0]"
    friend bool operator==(const FactorCoordinates&, const FactorCoordinates&) = default;
};

struct EmbeddingCoordinates {
    std::vector<FactorCoordinates> factors;  // r = 1..n in order
    friend bool operator==(const EmbeddingCoordinates&, const EmbeddingCoordinates&) = default;
};

// A point of P^1, exact rational or the point at infinity.
struct MarkedPoint {
    bool infinite = false;
    Rational value;
    friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

// Pairwise-distinct marked points for the labels {a,b,c,1..n}; at most one
// may be infinite.
class InteriorConfiguration {
public:
    static InteriorConfiguration from_points(std::map<Label, MarkedPoint> points);

    // "a=0,b=1,c=-1,1=3/2,2=inf"
    static InteriorConfiguration parse(std::string_view text);

    const MarkedPoint& at(Label l) const;
    bool has(Label l) const { return points_.count(l) > 0; }
    int max_numeric() const;

private:
    std::map<Label, MarkedPoint> points_;
};

// Coordinates of a boundary point (trivalent tree) in the P^r factor: after
// forgetting the labels above r, z_i is 0 exactly when leaf i shares a
// branch with a at the vertex next to leaf r.
FactorCoordinates boundary_factor_coords(const LabeledTree& t, int r);

EmbeddingCoordinates embed_boundary(const LabeledTree& t);

// Coordinates of an interior point in the P^r factor, by the exact cross
// ratio sending (p_a, p_r) to (0, inf) with p_b to 1.  In the chart p_a = 0,
// p_r = inf this reduces to [p_b : p_c : p_1 : ... : p_{r-1}].
FactorCoordinates embed_interior(const InteriorConfiguration& cfg, int r);

struct HyperplaneReport {
    bool pass = true;
    std::uint64_t trees_checked = 0;
    std::string counterexample;  // tree text when pass is false
    std::string detail;
};

// Checks that every point of Tour(k) lies, in each P^r factor, on the k_r
// hyperplanes z_b = 0, z_c = 0, z_1 = 0, ..., z_{k_r - 2} = 0.
HyperplaneReport verify_hyperplanes(const Composition& k);

}  // namespace kapdeg
