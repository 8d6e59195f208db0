#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "qramsey/index_set.hpp"
#include "qramsey/setmap.hpp"
#include "qramsey/space.hpp"

namespace qramsey {

// Disjoint open balls of a common radius around the points indexed by
// O(s) u s. Centers are the enumeration's points for those indices; with
// radius at most a third of the least pairwise distance, distinct centers are
// at least 2*radius apart, so the balls cannot meet.
struct Neighborhood {
    IndexSet s;
    IndexSet obstruction;   // O(s) = f(s) \ s
    Rational radius;

    IndexSet center_indices() const;  // O(s) u s
};

// Step outcome: the successor (n+2)-set, or halt.
using StepResult = std::optional<IndexSet>;

// One h-step of a color evaluation, for trace output.
struct TraceRecord {
    IndexSet t;
    IndexSet s;
    IndexSet obstruction;
    Rational radius;
    std::optional<OrdinalIndex> matched;  // xi, absent on halt

    nlohmann::json to_json() const;
};

struct Witness {
    std::uint32_t k = 0;    // realized color
    IndexSet t;
    bool verified = false;  // independent re-coloring returned k

    nlohmann::json to_json(const Space& space) const;
};

// Ties a set mapping of level n to a space enumerated by the same position
// indices and colors the (n+2)-subsets: the color of t is the number of
// h-steps before the iteration halts, where h replaces max(t) by the unique
// obstruction index whose ball swallowed the dropped point. Evaluation is
// pure given the space and mapping; neighborhoods are computed on demand and
// cached. One worker per instance (caches are not synchronized).
class ColoringContext {
public:
    ColoringContext(std::shared_ptr<Space> space, std::shared_ptr<const SetMapping> setmap);

    std::uint32_t n() const { return setmap_->level(); }
    const Space& space() const { return *space_; }
    const SetMapping& setmap() const { return *setmap_; }

    // Ball assignment for an (n+1)-set s: radius is a third of the least
    // pairwise distance among the points of O(s) u s, or 1 for a singleton.
    const Neighborhood& neighborhoods(const IndexSet& s) const;

    // h(t) for an (n+2)-set t: with s = t \ {max(t)}, steps to s u {xi} when
    // the point of max(t) lies in the ball of exactly one xi in O(s),
    // otherwise halts. A successor always has a smaller max.
    StepResult h_step(const IndexSet& t) const;

    // Number of successful h-steps before halting. Strict descent of the max
    // bounds this by max(t).
    std::uint32_t color(const IndexSet& t) const;
    std::uint32_t color(const IndexSet& t, std::vector<TraceRecord>* trace) const;

    // Accepts the tuple as points; each must already be materialized.
    std::uint32_t color_points(const std::vector<Point>& w) const;
    IndexSet resolve(const std::vector<Point>& w) const;

    std::uint32_t color_mod(const IndexSet& t, std::uint32_t l) const;

    // First (n+2)-set t inside the filter with color 0: extends s (given, or
    // the first n+1 admissible indices) by an admissible index whose point
    // falls in the ball around the point of max(s). Verified internally.
    IndexSet witness_color_zero(const IndexFilter& m, std::optional<IndexSet> seed_s,
                                std::uint64_t budget) const;

    // Given u inside the filter, produces t inside the filter with
    // h(t) = u, hence color(t) = color(u) + 1. Takes the least alpha in u
    // with alpha in f(u \ {alpha}) and scans for an admissible index whose
    // point falls in the ball around the point of alpha. Both guarantees are
    // re-checked; a mismatch is an internal error and throws.
    IndexSet witness_step(const IndexSet& u, const IndexFilter& m, std::uint64_t budget) const;

    // witness_color_zero followed by `max_color` witness_steps; entry k has
    // color k, re-verified via an independent color call.
    std::vector<Witness> realize_colors(const IndexFilter& m, std::uint32_t max_color,
                                        std::uint64_t budget) const;

private:
    OrdinalIndex scan_ball(const IndexFilter& m, OrdinalIndex above, OrdinalIndex center,
                           const Rational& radius, std::uint64_t budget) const;

    std::shared_ptr<Space> space_;
    std::shared_ptr<const SetMapping> setmap_;
    mutable std::unordered_map<IndexSet, Neighborhood, IndexSet::Hash> cache_;
};

}  // namespace qramsey
