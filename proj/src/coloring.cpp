#include "qramsey/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace qramsey {

IndexSet Neighborhood::center_indices() const {
    IndexSet all = obstruction;
    for (OrdinalIndex xi : s) all = all.with(xi);
    return all;
}

nlohmann::json TraceRecord::to_json() const {
    nlohmann::json j{{"t", t.members()},
                     {"s", s.members()},
                     {"obstruction", obstruction.members()},
                     {"radius", to_string(radius)}};
    if (matched)
        j["step"] = {{"next", true}, {"xi", *matched}};
    else
        j["step"] = {{"next", false}};
    return j;
}

nlohmann::json Witness::to_json(const Space& space) const {
    nlohmann::json points = nlohmann::json::array();
    for (OrdinalIndex i : t) points.push_back(point_to_string(space.point(i)));
    return {{"k", k}, {"indices", t.members()}, {"points", points}, {"verified", verified}};
}

ColoringContext::ColoringContext(std::shared_ptr<Space> space,
                                 std::shared_ptr<const SetMapping> setmap)
    : space_(std::move(space)), setmap_(std::move(setmap)) {
    if (!space_ || !setmap_) throw std::invalid_argument("coloring: null space or set mapping");
}

const Neighborhood& ColoringContext::neighborhoods(const IndexSet& s) const {
    if (s.size() != setmap_->arity())
        throw std::invalid_argument("neighborhoods: expected a set of size " +
                                    std::to_string(setmap_->arity()) + ", got " + s.str());
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;

    Neighborhood nb;
    nb.s = s;
    nb.obstruction = setmap_->obstruction(s);
    IndexSet centers = nb.center_indices();

    if (centers.size() < 2) {
        nb.radius = 1;
        space_->point(centers.max());  // materialize even the singleton
    } else if (space_->dimension() == 1) {
        // least pairwise distance via sorting; exact and O(k log k)
        std::vector<Rational> values;
        values.reserve(centers.size());
        for (OrdinalIndex i : centers) values.push_back(space_->point(i)[0]);
        std::sort(values.begin(), values.end());
        Rational best = values[1] - values[0];
        for (std::size_t i = 2; i < values.size(); ++i) {
            Rational d = values[i] - values[i - 1];
            if (d < best) best = d;
        }
        nb.radius = best / 3;
    } else {
        Rational best = -1;
        const auto& members = centers.members();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                Rational d = space_->metric(members[i], members[j]);
                if (best < 0 || d < best) best = d;
            }
        nb.radius = best / 3;
    }
    if (nb.radius <= 0)
        throw std::logic_error("neighborhoods: nonpositive radius for " + s.str());
    return cache_.emplace(s, std::move(nb)).first->second;
}

StepResult ColoringContext::h_step(const IndexSet& t) const {
    if (t.size() != setmap_->arity() + 1)
        throw std::invalid_argument("h_step: expected a set of size " +
                                    std::to_string(setmap_->arity() + 1) + ", got " + t.str());
    IndexSet s = t.without(t.max());
    const Neighborhood& nb = neighborhoods(s);
    const Point& dropped = space_->point(t.max());

    std::optional<OrdinalIndex> matched;
    for (OrdinalIndex xi : nb.obstruction) {
        if (distance(space_->point(xi), dropped) < nb.radius) {
            if (matched)
                throw std::logic_error("h_step: two obstruction balls claim one point; "
                                       "assignment not disjoint at s = " + s.str());
            matched = xi;
        }
    }
    if (!matched) return std::nullopt;
    IndexSet successor = s.with(*matched);
    if (successor.max() >= t.max())
        throw std::logic_error("h_step: successor max did not descend at t = " + t.str());
    return successor;
}

std::uint32_t ColoringContext::color(const IndexSet& t) const { return color(t, nullptr); }

std::uint32_t ColoringContext::color(const IndexSet& t, std::vector<TraceRecord>* trace) const {
    IndexSet current = t;
    std::uint32_t steps = 0;
    while (true) {
        StepResult next = h_step(current);
        if (trace) {
            IndexSet s = current.without(current.max());
            const Neighborhood& nb = neighborhoods(s);
            TraceRecord rec{current, s, nb.obstruction, nb.radius, std::nullopt};
            if (next) rec.matched = next->minus(s).min();
            trace->push_back(std::move(rec));
        }
        if (!next) break;
        current = *next;
        ++steps;
        if (steps >= t.max())
            throw std::logic_error("color: descent bound exceeded at t = " + t.str());
    }
    return steps;
}

IndexSet ColoringContext::resolve(const std::vector<Point>& w) const {
    std::vector<OrdinalIndex> indices;
    indices.reserve(w.size());
    for (const Point& p : w) {
        auto idx = space_->find_index(p);
        if (!idx)
            throw std::invalid_argument("color: point " + point_to_string(p) +
                                        " not in the materialized enumeration");
        indices.push_back(*idx);
    }
    return IndexSet::of_values(std::move(indices));
}

std::uint32_t ColoringContext::color_points(const std::vector<Point>& w) const {
    return color(resolve(w));
}

std::uint32_t ColoringContext::color_mod(const IndexSet& t, std::uint32_t l) const {
    if (l == 0) throw std::invalid_argument("color_mod: l must be >= 1");
    return color(t) % l;
}

OrdinalIndex ColoringContext::scan_ball(const IndexFilter& m, OrdinalIndex above,
                                        OrdinalIndex center, const Rational& radius,
                                        std::uint64_t budget) const {
    const Point& target = space_->point(center);
    std::uint64_t candidate = static_cast<std::uint64_t>(above) + 1;
    for (std::uint64_t scanned = 0; scanned < budget; ++candidate, ++scanned) {
        if (!space_->in_range(static_cast<OrdinalIndex>(candidate)))
            throw BudgetExhaustedError("witness scan: enumeration ended before a point of the "
                                       "ball around position " + std::to_string(center));
        OrdinalIndex i = static_cast<OrdinalIndex>(candidate);
        if (!m.contains(i)) continue;
        if (distance(space_->point(i), target) < radius) return i;
    }
    throw BudgetExhaustedError("witness scan: no admissible point inside the ball around "
                               "position " + std::to_string(center) + " within budget " +
                               std::to_string(budget) +
                               " (the filtered set may not trace a dense-in-itself subspace)");
}

IndexSet ColoringContext::witness_color_zero(const IndexFilter& m, std::optional<IndexSet> seed_s,
                                             std::uint64_t budget) const {
    IndexSet s;
    if (seed_s) {
        s = *seed_s;
        if (s.size() != setmap_->arity())
            throw std::invalid_argument("witness_color_zero: seed set must have size " +
                                        std::to_string(setmap_->arity()));
        for (OrdinalIndex i : s)
            if (!m.contains(i))
                throw std::invalid_argument("witness_color_zero: seed index " +
                                            std::to_string(i) + " outside the filter");
    } else {
        std::vector<OrdinalIndex> first;
        for (std::uint64_t i = 0; first.size() < setmap_->arity(); ++i) {
            if (!space_->in_range(static_cast<OrdinalIndex>(i)) || i > budget)
                throw BudgetExhaustedError("witness_color_zero: filter yields too few indices");
            if (m.contains(static_cast<OrdinalIndex>(i)))
                first.push_back(static_cast<OrdinalIndex>(i));
        }
        s = IndexSet::of_sorted(std::move(first));
    }

    const Neighborhood& nb = neighborhoods(s);
    OrdinalIndex delta = scan_ball(m, s.max(), s.max(), nb.radius, budget);
    IndexSet t = s.with(delta);
    if (std::uint32_t c = color(t); c != 0)
        throw std::logic_error("witness_color_zero: constructed set " + t.str() +
                               " has color " + std::to_string(c));
    return t;
}

IndexSet ColoringContext::witness_step(const IndexSet& u, const IndexFilter& m,
                                       std::uint64_t budget) const {
    if (u.size() != setmap_->arity() + 1)
        throw std::invalid_argument("witness_step: expected a set of size " +
                                    std::to_string(setmap_->arity() + 1) + ", got " + u.str());
    for (OrdinalIndex i : u)
        if (!m.contains(i))
            throw std::invalid_argument("witness_step: index " + std::to_string(i) +
                                        " outside the filter");
    std::uint32_t base = color(u);

    // least alpha with alpha in f(u \ {alpha}); exists by the free-set property
    std::optional<OrdinalIndex> alpha;
    for (OrdinalIndex candidate : u) {
        if (candidate == u.max()) break;
        if (setmap_->f(u.without(candidate)).contains(candidate)) {
            alpha = candidate;
            break;
        }
    }
    if (!alpha)
        throw std::logic_error("witness_step: no member of " + u.str() +
                               " lands in the mapping of its complement");

    IndexSet s = u.without(*alpha);
    const Neighborhood& nb = neighborhoods(s);
    OrdinalIndex delta = scan_ball(m, s.max(), *alpha, nb.radius, budget);
    IndexSet t = s.with(delta);

    StepResult stepped = h_step(t);
    if (!stepped || *stepped != u)
        throw std::logic_error("witness_step: h did not step from " + t.str() + " back to " +
                               u.str());
    if (std::uint32_t c = color(t); c != base + 1)
        throw std::logic_error("witness_step: constructed set " + t.str() + " has color " +
                               std::to_string(c) + ", expected " + std::to_string(base + 1));
    return t;
}

std::vector<Witness> ColoringContext::realize_colors(const IndexFilter& m,
                                                     std::uint32_t max_color,
                                                     std::uint64_t budget) const {
    std::vector<Witness> out;
    IndexSet current = witness_color_zero(m, std::nullopt, budget);
    out.push_back({0, current, color(current) == 0});
    for (std::uint32_t k = 1; k <= max_color; ++k) {
        current = witness_step(current, m, budget);
        out.push_back({k, current, color(current) == k});
    }
    return out;
}

}  // namespace qramsey
