#include "kapdeg/kapranov.hpp"

#include <algorithm>
#include <stdexcept>

#include "kapdeg/tournament.hpp"

namespace kapdeg {

std::vector<std::string> FactorCoordinates::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coords.size());
    for (const Rational& v : coords) out.push_back(v.to_string());
    return out;
}

std::string FactorCoordinates::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ":";
        out += coords[i].to_string();
    }
    return out + "]";
}

InteriorConfiguration InteriorConfiguration::from_points(std::map<Label, MarkedPoint> points) {
    int infinite_count = 0;
    for (auto it = points.begin(); it != points.end(); ++it) {
        if (it->second.infinite) {
            ++infinite_count;
            continue;
        }
        for (auto jt = std::next(it); jt != points.end(); ++jt)
            if (!jt->second.infinite && it->second.value == jt->second.value)
                throw std::invalid_argument("marked points must be pairwise distinct");
    }
    if (infinite_count > 1)
        throw std::invalid_argument("at most one marked point may be infinite");
    InteriorConfiguration out;
    out.points_ = std::move(points);
    return out;
}

InteriorConfiguration InteriorConfiguration::parse(std::string_view text) {
    std::map<Label, MarkedPoint> points;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("marked point must look like label=value");
        auto label = Label::parse(item.substr(0, eq));
        if (!label) throw std::invalid_argument("bad marked point label");
        std::string_view value = item.substr(eq + 1);
        MarkedPoint point;
        if (value == "inf" || value == "oo") {
            point.infinite = true;
        } else {
            point.value = Rational::parse(value);
        }
        if (!points.emplace(*label, point).second)
            throw std::invalid_argument("marked point given twice");
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return from_points(std::move(points));
}

const MarkedPoint& InteriorConfiguration::at(Label l) const {
    auto it = points_.find(l);
    if (it == points_.end())
        throw std::invalid_argument("marked point missing for label " + l.to_string());
    return it->second;
}

int InteriorConfiguration::max_numeric() const {
    int max = 0;
    for (const auto& [label, point] : points_)
        if (label.is_num()) max = std::max(max, label.number());
    return max;
}

namespace {

void normalize(std::vector<Rational>& coords) {
    for (const Rational& v : coords) {
        if (!v.is_zero()) {
            Rational pivot = v;
            for (Rational& u : coords) u = u / pivot;
            return;
        }
    }
    throw std::logic_error("projective point with all coordinates zero");
}

std::vector<Label> factor_index_labels(int r) {
    std::vector<Label> out{Label::b(), Label::c()};
    for (int i = 1; i <= r - 1; ++i) out.push_back(Label::num(i));
    return out;
}

}  // namespace

FactorCoordinates boundary_factor_coords(const LabeledTree& t, int r) {
    if (!t.has_standard_labels())
        throw std::invalid_argument("boundary coordinates need labels {a,b,c,1..n}");
    if (r < 1 || r > t.n()) throw std::invalid_argument("factor index out of range");

    LabeledTree reduced = t;
    for (int m = t.n(); m > r; --m) reduced = reduced.forget(Label::num(m));

    BranchView view = reduced.branches_at(Label::num(r));
    const std::vector<Label>& with_a = view.branch_containing(Label::a());

    FactorCoordinates out;
    out.factor = r;
    for (Label l : factor_index_labels(r)) {
        bool shares = std::find(with_a.begin(), with_a.end(), l) != with_a.end();
        out.coords.push_back(shares ? Rational(0) : Rational(1));
    }
    normalize(out.coords);
    return out;
}

EmbeddingCoordinates embed_boundary(const LabeledTree& t) {
    EmbeddingCoordinates out;
    for (int r = 1; r <= t.n(); ++r) out.factors.push_back(boundary_factor_coords(t, r));
    return out;
}

FactorCoordinates embed_interior(const InteriorConfiguration& cfg, int r) {
    if (r < 1) throw std::invalid_argument("factor index out of range");
    const MarkedPoint& pa = cfg.at(Label::a());
    const MarkedPoint& pr = cfg.at(Label::num(r));

    // cross ratio phi with phi(p_a) = 0, phi(p_r) = inf, phi(p_b) = 1;
    // inputs never coincide with p_r, so values stay finite
    const MarkedPoint& q = cfg.at(Label::b());
    auto phi = [&](const MarkedPoint& x) -> Rational {
        if (pr.infinite) {
            // phi(x) = (x - p_a) / (q - p_a)
            if (x.infinite) throw std::invalid_argument("two marked points at infinity");
            return (x.value - pa.value) / (q.value - pa.value);
        }
        if (pa.infinite) {
            // phi(x) = (q - p_r) / (x - p_r)
            if (x.infinite) return Rational(0);
            return (q.value - pr.value) / (x.value - pr.value);
        }
        if (x.infinite) return (q.value - pr.value) / (q.value - pa.value);
        return ((x.value - pa.value) * (q.value - pr.value)) /
               ((x.value - pr.value) * (q.value - pa.value));
    };

    FactorCoordinates out;
    out.factor = r;
    for (Label l : factor_index_labels(r)) out.coords.push_back(phi(cfg.at(l)));
    normalize(out.coords);
    return out;
}

HyperplaneReport verify_hyperplanes(const Composition& k) {
    if (!k.is_weak_of_length())
        throw std::invalid_argument("composition parts must sum to the length");
    HyperplaneReport report;
    tour_set(k, [&](const LabeledTree& t) {
        if (!report.pass) return;
        ++report.trees_checked;
        for (int r = 1; r <= k.length(); ++r) {
            int kr = k.part(r);
            if (kr == 0) continue;
            if (kr > r) {
                report.pass = false;
                report.counterexample = t.to_string();
                report.detail = "k_" + std::to_string(r) + " exceeds the factor index";
                return;
            }
            FactorCoordinates fc = boundary_factor_coords(t, r);
            // hyperplanes z_b, then z_c, then z_1..z_{k_r-2}
            for (int h = 0; h < kr; ++h) {
                if (!fc.coords[static_cast<std::size_t>(h)].is_zero()) {
                    report.pass = false;
                    report.counterexample = t.to_string();
                    report.detail = "factor " + std::to_string(r) + " coordinate " +
                                    std::to_string(h) + " is nonzero: " + fc.to_string();
                    return;
                }
            }
        }
    });
    return report;
}

}  // namespace kapdeg
