#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace qramsey {

// Position in a fixed well-order. Carriers are initial segments of the
// integers, so the usual integer order is the well-order.
using OrdinalIndex = std::uint32_t;

// Finite set of ordinal positions, stored strictly increasing.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<OrdinalIndex> xs);

    // Validates strict increase.
    static IndexSet of_sorted(std::vector<OrdinalIndex> members);
    // Sorts; duplicate members are an error.
    static IndexSet of_values(std::vector<OrdinalIndex> members);

    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    const std::vector<OrdinalIndex>& members() const { return members_; }
    OrdinalIndex operator[](std::size_t i) const { return members_[i]; }

    OrdinalIndex max() const;  // last member; undefined on empty (throws)
    OrdinalIndex min() const;

    bool contains(OrdinalIndex x) const;
    IndexSet with(OrdinalIndex x) const;     // insert copy
    IndexSet without(OrdinalIndex x) const;  // erase copy
    IndexSet minus(const IndexSet& other) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const IndexSet&) const = default;
    bool operator<(const IndexSet& other) const { return members_ < other.members_; }

    struct Hash {
        std::size_t operator()(const IndexSet& s) const;
    };

    std::string str() const;  // "{1,4,7}"

private:
    std::vector<OrdinalIndex> members_;
};

}  // namespace qramsey
