#include "qramsey/index_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace qramsey {

IndexSet::IndexSet(std::initializer_list<OrdinalIndex> xs)
    : IndexSet(of_values(std::vector<OrdinalIndex>(xs))) {}

IndexSet IndexSet::of_sorted(std::vector<OrdinalIndex> members) {
    for (std::size_t i = 1; i < members.size(); ++i)
        if (members[i - 1] >= members[i])
            throw std::invalid_argument("IndexSet: members not strictly increasing");
    IndexSet s;
    s.members_ = std::move(members);
    return s;
}

IndexSet IndexSet::of_values(std::vector<OrdinalIndex> members) {
    std::sort(members.begin(), members.end());
    return of_sorted(std::move(members));
}

OrdinalIndex IndexSet::max() const {
    if (empty()) throw std::logic_error("max() of empty IndexSet");
    return members_.back();
}

OrdinalIndex IndexSet::min() const {
    if (empty()) throw std::logic_error("min() of empty IndexSet");
    return members_.front();
}

bool IndexSet::contains(OrdinalIndex x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
}

IndexSet IndexSet::with(OrdinalIndex x) const {
    if (contains(x)) return *this;
    IndexSet s;
    s.members_.reserve(members_.size() + 1);
    auto pos = std::lower_bound(members_.begin(), members_.end(), x);
    s.members_.assign(members_.begin(), pos);
    s.members_.push_back(x);
    s.members_.insert(s.members_.end(), pos, members_.end());
    return s;
}

IndexSet IndexSet::without(OrdinalIndex x) const {
    IndexSet s;
    s.members_.reserve(members_.size());
    for (OrdinalIndex m : members_)
        if (m != x) s.members_.push_back(m);
    return s;
}

IndexSet IndexSet::minus(const IndexSet& other) const {
    IndexSet s;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(s.members_));
    return s;
}

std::size_t IndexSet::Hash::operator()(const IndexSet& s) const {
    // FNV-1a over the member words
    std::size_t h = 1469598103934665603ull;
    for (OrdinalIndex m : s.members()) {
        h ^= m;
        h *= 1099511628211ull;
    }
    return h;
}

std::string IndexSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(members_[i]);
    }
    out += "}";
    return out;
}

}  // namespace qramsey
