#include "qramsey/setmap.hpp"

#include <random>
#include <stdexcept>

#include "qramsey/combinatorics.hpp"

namespace qramsey {

SetMapping::SetMapping(std::shared_ptr<const GroundSet> ground, bool memoize)
    : ground_(std::move(ground)), memoize_(memoize) {
    if (!ground_) throw std::invalid_argument("SetMapping: null ground set");
    if (ground_->level() > 0) {
        // share the chain: lower mapping over the lower carrier
        std::shared_ptr<const GroundSet> below(ground_, ground_->lower());
        lower_ = std::make_shared<SetMapping>(below, memoize);
    }
}

IndexSet SetMapping::f(const IndexSet& s) const {
    if (s.size() != arity())
        throw std::invalid_argument("f: expected a set of size " + std::to_string(arity()) +
                                    ", got " + s.str());
    if (s.max() >= ground_->size())
        throw std::invalid_argument("f: member " + std::to_string(s.max()) +
                                    " outside carrier of size " + std::to_string(ground_->size()));
    if (memoize_) {
        auto it = memo_.find(s);
        if (it != memo_.end()) return it->second;
        IndexSet value = eval(s);
        return memo_.emplace(s, std::move(value)).first->second;
    }
    return eval(s);
}

IndexSet SetMapping::eval(const IndexSet& s) const {
    if (ground_->level() == 0) {
        OrdinalIndex m = s.max();
        std::vector<OrdinalIndex> below(m);
        for (OrdinalIndex i = 0; i < m; ++i) below[i] = i;
        return IndexSet::of_sorted(std::move(below));
    }
    OrdinalIndex gamma = s.max();
    IndexSet rest = s.without(gamma);
    IndexSet image = ground_->apply_injection(gamma, rest);
    IndexSet value = lower_->f(image);
    return ground_->invert_injection(gamma, value);
}

IndexSet SetMapping::obstruction(const IndexSet& s) const { return f(s).minus(s); }

namespace {

// Least alpha in t with alpha in f(t \ {alpha}), if any. Clause-bound
// members only: alpha = max(t) never qualifies since f(t \ {max}) sits
// below its own max.
std::optional<OrdinalIndex> least_witness(const SetMapping& map, const IndexSet& t) {
    for (OrdinalIndex alpha : t) {
        if (alpha == t.max()) break;
        if (map.f(t.without(alpha)).contains(alpha)) return alpha;
    }
    return std::nullopt;
}

}  // namespace

VerificationReport verify_free_set_property(const SetMapping& map, const VerifyOptions& options) {
    const GroundSet& g = map.ground();
    VerificationReport report;
    report.level = g.level();
    report.carrier = g.size();
    report.rule = g.descriptor().rule;
    report.seed = g.descriptor().seed;

    std::size_t k = map.arity() + 1;  // (n+2)-sets
    auto check = [&](const std::vector<OrdinalIndex>& members) {
        IndexSet t = IndexSet::of_sorted(members);
        ++report.checked;
        if (auto alpha = least_witness(map, t)) {
            report.witnesses.emplace_back(t, *alpha);
            ++report.witness_histogram[*alpha];
        } else {
            report.violations.push_back(t);
        }
    };

    if (options.exhaustive) {
        report.mode = "exhaustive";
        if (binomial(g.size(), k) > 20'000'000ull)
            throw std::invalid_argument("verify_free_set_property: carrier too large for an "
                                        "exhaustive sweep; use sampling");
        for_each_ksubset(g.size(), k, check);
    } else {
        report.mode = "sample";
        if (g.size() < k)
            throw std::invalid_argument("verify_free_set_property: carrier smaller than set size");
        std::mt19937_64 rng(options.sample_seed);
        for (std::uint64_t i = 0; i < options.sample_count; ++i)
            check(sample_ksubset(g.size(), k, rng));
    }
    return report;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json violations_json = nlohmann::json::array();
    for (const auto& t : violations) violations_json.push_back(t.members());
    nlohmann::json histogram = nlohmann::json::object();
    for (const auto& [alpha, count] : witness_histogram)
        histogram[std::to_string(alpha)] = count;
    return {{"level", level},
            {"carrier", carrier},
            {"rule", injection_rule_name(rule)},
            {"seed", seed},
            {"mode", mode},
            {"checked", checked},
            {"violations", violations_json},
            {"witness_histogram", histogram}};
}

BoundReport verify_bound_property(const SetMapping& map) {
    const GroundSet& g = map.ground();
    BoundReport report;
    report.level = g.level();
    report.carrier = g.size();
    report.rule = g.descriptor().rule;
    report.seed = g.descriptor().seed;

    for_each_ksubset(g.size(), map.arity(), [&](const std::vector<OrdinalIndex>& members) {
        IndexSet s = IndexSet::of_sorted(members);
        IndexSet value = map.f(s);
        ++report.checked;
        if (!value.empty() && value.max() >= s.max()) report.violations.push_back(s);
    });
    return report;
}

nlohmann::json BoundReport::to_json() const {
    nlohmann::json violations_json = nlohmann::json::array();
    for (const auto& s : violations) violations_json.push_back(s.members());
    return {{"level", level},
            {"carrier", carrier},
            {"rule", injection_rule_name(rule)},
            {"seed", seed},
            {"checked", checked},
            {"violations", violations_json}};
}

}  // namespace qramsey
