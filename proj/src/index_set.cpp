#include "ggmident/index_set.hpp"

#include <algorithm>

namespace ggmident {

namespace {
std::vector<int> normalized(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}
}  // namespace

IndexSet::IndexSet(std::initializer_list<int> members)
    : members_(normalized(std::vector<int>(members))) {}

IndexSet::IndexSet(std::vector<int> members) : members_(normalized(std::move(members))) {}

IndexSet IndexSet::full(int p) {
    std::vector<int> all(static_cast<std::size_t>(p > 0 ? p : 0));
    for (int i = 0; i < p; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    IndexSet s;
    s.members_ = std::move(all);
    return s;
}

bool IndexSet::contains(int label) const {
    return std::binary_search(members_.begin(), members_.end(), label);
}

IndexSet IndexSet::with(int label) const {
    if (contains(label)) return *this;
    IndexSet out = *this;
    out.members_.insert(std::lower_bound(out.members_.begin(), out.members_.end(), label), label);
    return out;
}

IndexSet IndexSet::without(int label) const {
    IndexSet out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), label);
    if (it != out.members_.end() && *it == label) out.members_.erase(it);
    return out;
}

IndexSet IndexSet::unioned(const IndexSet& other) const {
    std::vector<int> merged;
    merged.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(merged));
    IndexSet out;
    out.members_ = std::move(merged);
    return out;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
    std::vector<int> common;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(common));
    IndexSet out;
    out.members_ = std::move(common);
    return out;
}

bool IndexSet::intersects(const IndexSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a;
        else ++b;
    }
    return false;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

IndexSet IndexSet::complement(int p) const {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(p));
    auto it = members_.begin();
    for (int label = 1; label <= p; ++label) {
        if (it != members_.end() && *it == label) {
            ++it;
        } else {
            rest.push_back(label);
        }
    }
    IndexSet out;
    out.members_ = std::move(rest);
    return out;
}

}  // namespace ggmident
