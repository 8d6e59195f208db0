#include "qramsey/ground.hpp"

#include <random>
#include <stdexcept>

#include "qramsey/combinatorics.hpp"

namespace qramsey {

std::string injection_rule_name(InjectionRule rule) {
    switch (rule) {
        case InjectionRule::identity: return "identity";
        case InjectionRule::reverse: return "reverse";
        case InjectionRule::seeded_random: return "seeded-random";
    }
    throw std::logic_error("unreachable");
}

InjectionRule parse_injection_rule(const std::string& name) {
    if (name == "identity") return InjectionRule::identity;
    if (name == "reverse") return InjectionRule::reverse;
    if (name == "seeded-random" || name == "random") return InjectionRule::seeded_random;
    throw std::invalid_argument("unknown injection rule: '" + name + "'");
}

nlohmann::json GroundDescriptor::to_json() const {
    return {{"level", level},
            {"sizes", sizes},
            {"rule", injection_rule_name(rule)},
            {"seed", seed}};
}

GroundDescriptor GroundDescriptor::from_json(const nlohmann::json& j) {
    GroundDescriptor d;
    d.level = j.at("level").get<std::uint32_t>();
    d.sizes = j.at("sizes").get<std::vector<OrdinalIndex>>();
    d.rule = parse_injection_rule(j.at("rule").get<std::string>());
    d.seed = j.value("seed", std::uint64_t{0});
    return d;
}

std::shared_ptr<const GroundSet> GroundSet::make(const GroundDescriptor& desc) {
    if (desc.sizes.size() != desc.level + 1)
        throw std::invalid_argument("ground sizes: expected " + std::to_string(desc.level + 1) +
                                    " entries, got " + std::to_string(desc.sizes.size()));
    for (std::size_t i = 0; i < desc.sizes.size(); ++i)
        if (desc.sizes[i] == 0)
            throw std::invalid_argument("ground sizes: carrier sizes must be positive");
    // sizes[i] is the carrier at level level-i; its injections land one entry
    // to the right. e_gamma with gamma = sizes[i]-1 needs that many distinct
    // images below.
    for (std::size_t i = 0; i + 1 < desc.sizes.size(); ++i) {
        if (desc.sizes[i] >= 1 && desc.sizes[i] - 1 > desc.sizes[i + 1])
            throw std::invalid_argument(
                "ground sizes: size constraint violated (gamma = " +
                std::to_string(desc.sizes[i] - 1) + " needs " + std::to_string(desc.sizes[i] - 1) +
                " distinct images in a carrier of size " + std::to_string(desc.sizes[i + 1]) + ")");
    }

    std::shared_ptr<const GroundSet> below;
    for (std::uint32_t lvl = 0; lvl <= desc.level; ++lvl) {
        auto g = std::shared_ptr<GroundSet>(new GroundSet());
        g->level_ = lvl;
        g->size_ = desc.sizes[desc.level - lvl];
        g->rule_ = desc.rule;
        g->seed_ = desc.seed;
        g->lower_ = below;
        g->descriptor_.level = lvl;
        g->descriptor_.sizes.assign(desc.sizes.end() - (lvl + 1), desc.sizes.end());
        g->descriptor_.rule = desc.rule;
        g->descriptor_.seed = desc.seed;
        below = g;
    }
    return below;
}

std::shared_ptr<const GroundSet> GroundSet::make(std::uint32_t level,
                                                 std::vector<OrdinalIndex> sizes,
                                                 InjectionRule rule, std::uint64_t seed) {
    return make(GroundDescriptor{level, std::move(sizes), rule, seed});
}

const std::vector<OrdinalIndex>& GroundSet::random_table(OrdinalIndex gamma) const {
    std::lock_guard<std::mutex> lock(table_mutex_);
    auto it = tables_.find(gamma);
    if (it != tables_.end()) return it->second;

    // Sample gamma distinct images below lower()->size() with a sparse
    // Fisher-Yates; deterministic in (seed, level, gamma).
    std::mt19937_64 rng(mix64(seed_ ^ mix64((std::uint64_t{level_} << 32) | gamma)));
    std::vector<OrdinalIndex> table =
        sample_ksubset(lower_->size(), gamma, rng);  // sorted sample
    // shuffle so the injection is not order-preserving
    for (std::size_t i = table.size(); i > 1; --i)
        std::swap(table[i - 1], table[rng() % i]);

    auto& inv = inverse_tables_[gamma];
    for (OrdinalIndex beta = 0; beta < gamma; ++beta) inv[table[beta]] = beta;
    return tables_.emplace(gamma, std::move(table)).first->second;
}

OrdinalIndex GroundSet::inject(OrdinalIndex gamma, OrdinalIndex beta) const {
    if (level_ == 0) throw std::logic_error("inject: level-0 ground set has no injections");
    if (gamma >= size_)
        throw std::invalid_argument("inject: gamma " + std::to_string(gamma) +
                                    " outside carrier of size " + std::to_string(size_));
    if (beta >= gamma)
        throw std::invalid_argument("inject: " + std::to_string(beta) + " not below gamma " +
                                    std::to_string(gamma));
    switch (rule_) {
        case InjectionRule::identity: return beta;
        case InjectionRule::reverse: return gamma - 1 - beta;
        case InjectionRule::seeded_random: return random_table(gamma)[beta];
    }
    throw std::logic_error("unreachable");
}

IndexSet GroundSet::apply_injection(OrdinalIndex gamma, const IndexSet& s) const {
    std::vector<OrdinalIndex> image;
    image.reserve(s.size());
    for (OrdinalIndex beta : s) image.push_back(inject(gamma, beta));
    return IndexSet::of_values(std::move(image));
}

IndexSet GroundSet::invert_injection(OrdinalIndex gamma, const IndexSet& s) const {
    if (level_ == 0) throw std::logic_error("invert_injection: level-0 ground set");
    if (gamma >= size_)
        throw std::invalid_argument("invert_injection: gamma " + std::to_string(gamma) +
                                    " outside carrier of size " + std::to_string(size_));
    std::vector<OrdinalIndex> pre;
    switch (rule_) {
        case InjectionRule::identity:
            for (OrdinalIndex m : s)
                if (m < gamma) pre.push_back(m);
            break;
        case InjectionRule::reverse:
            for (OrdinalIndex m : s)
                if (m < gamma) pre.push_back(gamma - 1 - m);
            break;
        case InjectionRule::seeded_random: {
            random_table(gamma);  // ensure inverse exists
            std::lock_guard<std::mutex> lock(table_mutex_);
            const auto& inv = inverse_tables_.at(gamma);
            for (OrdinalIndex m : s) {
                auto it = inv.find(m);
                if (it != inv.end()) pre.push_back(it->second);
            }
            break;
        }
    }
    return IndexSet::of_values(std::move(pre));
}

}  // namespace qramsey
