#ifndef GGMIDENT_INDEX_SET_HPP
#define GGMIDENT_INDEX_SET_HPP

#include <initializer_list>
#include <vector>

namespace ggmident {

/// An ordered set of 1-based node labels. Members are kept strictly
/// increasing with no duplicates; range checks against a particular
/// dimension happen at the point of use.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> members);
    explicit IndexSet(std::vector<int> members);

    /// The full set {1, ..., p}.
    static IndexSet full(int p);

    bool contains(int label) const;
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }

    const std::vector<int>& members() const { return members_; }
    std::vector<int>::const_iterator begin() const { return members_.begin(); }
    std::vector<int>::const_iterator end() const { return members_.end(); }

    IndexSet with(int label) const;
    IndexSet without(int label) const;
    IndexSet unioned(const IndexSet& other) const;
    IndexSet intersect(const IndexSet& other) const;
    bool intersects(const IndexSet& other) const;
    bool is_subset_of(const IndexSet& other) const;

    /// {1..p} \ this.
    IndexSet complement(int p) const;

    bool operator==(const IndexSet& other) const = default;
    /// Lexicographic on the sorted member lists.
    bool operator<(const IndexSet& other) const { return members_ < other.members_; }

private:
    std::vector<int> members_;
};

}  // namespace ggmident

#endif  // GGMIDENT_INDEX_SET_HPP
