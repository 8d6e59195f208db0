#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qramsey/ground.hpp"
#include "qramsey/index_set.hpp"

namespace qramsey {

// The recursive set mapping over a ground-set chain. For a level-n carrier it
// maps each (n+1)-set s to a finite subset of {0,...,max(s)-1}:
//
//   level 0:  f({m}) = {0,...,m-1}
//   level k+1 with gamma = max(s):
//             f(s) = e_gamma^{-1}( f_lower( e_gamma''(s \ {gamma}) ) )
//
// Values are memoized per exact member sequence; the witness search
// re-evaluates heavily overlapping sets. One worker per instance: the memo is
// not synchronized.
class SetMapping {
public:
    explicit SetMapping(std::shared_ptr<const GroundSet> ground, bool memoize = true);

    const GroundSet& ground() const { return *ground_; }
    std::uint32_t level() const { return ground_->level(); }
    std::size_t arity() const { return ground_->level() + 1; }

    // f(s). Requires |s| = level+1 and every member inside the carrier.
    IndexSet f(const IndexSet& s) const;

    // O(s) = f(s) \ s. Disjoint from s, every member below max(s).
    IndexSet obstruction(const IndexSet& s) const;

private:
    IndexSet eval(const IndexSet& s) const;

    std::shared_ptr<const GroundSet> ground_;
    std::shared_ptr<const SetMapping> lower_;
    bool memoize_ = true;
    mutable std::unordered_map<IndexSet, IndexSet, IndexSet::Hash> memo_;
};

struct VerifyOptions {
    bool exhaustive = true;
    std::uint64_t sample_count = 0;  // used when !exhaustive
    std::uint64_t sample_seed = 0;
};

// Outcome of sweeping (n+2)-sets t for a member alpha < max(t) with
// alpha in f(t \ {alpha}). `witnesses` records the least such alpha per t;
// a t with no witness lands in `violations`.
struct VerificationReport {
    std::uint32_t level = 0;
    OrdinalIndex carrier = 0;
    InjectionRule rule = InjectionRule::identity;
    std::uint64_t seed = 0;
    std::string mode;
    std::uint64_t checked = 0;
    std::vector<IndexSet> violations;
    std::vector<std::pair<IndexSet, OrdinalIndex>> witnesses;
    std::map<OrdinalIndex, std::uint64_t> witness_histogram;

    bool ok() const { return violations.empty(); }
    nlohmann::json to_json() const;
};

VerificationReport verify_free_set_property(const SetMapping& map,
                                            const VerifyOptions& options = {});

// Sweep of the domain checking f(s) is contained in {0,...,max(s)-1}.
struct BoundReport {
    std::uint32_t level = 0;
    OrdinalIndex carrier = 0;
    InjectionRule rule = InjectionRule::identity;
    std::uint64_t seed = 0;
    std::uint64_t checked = 0;
    std::vector<IndexSet> violations;

    bool ok() const { return violations.empty(); }
    nlohmann::json to_json() const;
};

BoundReport verify_bound_property(const SetMapping& map);

}  // namespace qramsey
