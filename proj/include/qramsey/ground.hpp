#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "qramsey/index_set.hpp"

namespace qramsey {

// How the injection family e_gamma is realized. Every rule yields, for each
// gamma in the carrier, an injection from {0,...,gamma-1} into the carrier one
// level down; the constructions downstream depend only on injectivity.
enum class InjectionRule { identity, reverse, seeded_random };

std::string injection_rule_name(InjectionRule rule);
InjectionRule parse_injection_rule(const std::string& name);

// Everything needed to rebuild a ground-set chain. `sizes` lists carrier
// sizes from the top level down: sizes.front() is the carrier at `level`,
// sizes.back() the carrier at level 0. Injection tables are reproducible from
// the descriptor and never serialized raw.
struct GroundDescriptor {
    std::uint32_t level = 0;
    std::vector<OrdinalIndex> sizes;
    InjectionRule rule = InjectionRule::identity;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
    static GroundDescriptor from_json(const nlohmann::json& j);
};

// Well-ordered carrier of a given level, chained to the carrier one level
// down. Logically immutable; the seeded-random rule memoizes its per-gamma
// tables behind a mutex, so concurrent readers are fine.
class GroundSet {
public:
    // Builds the whole chain, top level first. Throws std::invalid_argument
    // when sizes are inconsistent with level or too small for any injection
    // to exist.
    static std::shared_ptr<const GroundSet> make(const GroundDescriptor& desc);
    static std::shared_ptr<const GroundSet> make(std::uint32_t level,
                                                 std::vector<OrdinalIndex> sizes,
                                                 InjectionRule rule = InjectionRule::identity,
                                                 std::uint64_t seed = 0);

    std::uint32_t level() const { return level_; }
    OrdinalIndex size() const { return size_; }
    const GroundSet* lower() const { return lower_.get(); }
    const GroundDescriptor& descriptor() const { return descriptor_; }

    // e_gamma(beta). Requires level >= 1, beta < gamma < size.
    OrdinalIndex inject(OrdinalIndex gamma, OrdinalIndex beta) const;

    // Image set e_gamma''(s). Every member of s must be below gamma.
    IndexSet apply_injection(OrdinalIndex gamma, const IndexSet& s) const;

    // Preimage {beta < gamma : e_gamma(beta) in s}. Members of s outside the
    // range of e_gamma are dropped.
    IndexSet invert_injection(OrdinalIndex gamma, const IndexSet& s) const;

private:
    GroundSet() = default;

    const std::vector<OrdinalIndex>& random_table(OrdinalIndex gamma) const;

    std::uint32_t level_ = 0;
    OrdinalIndex size_ = 0;
    InjectionRule rule_ = InjectionRule::identity;
    std::uint64_t seed_ = 0;
    std::shared_ptr<const GroundSet> lower_;
    GroundDescriptor descriptor_;

    mutable std::mutex table_mutex_;
    mutable std::unordered_map<OrdinalIndex, std::vector<OrdinalIndex>> tables_;
    mutable std::unordered_map<OrdinalIndex, std::unordered_map<OrdinalIndex, OrdinalIndex>>
        inverse_tables_;
};

}  // namespace qramsey
