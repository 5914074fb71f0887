#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gomplab {

/// A strictly increasing set of column indices.
class IndexSet {
public:
    IndexSet() = default;

    /// Sorts the input; throws std::invalid_argument on duplicates or
    /// negative entries.
    explicit IndexSet(std::vector<int> indices) : idx_(std::move(indices)) {
        std::sort(idx_.begin(), idx_.end());
        if (!idx_.empty() && idx_.front() < 0)
            throw std::invalid_argument("IndexSet: negative index");
        if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end())
            throw std::invalid_argument("IndexSet: duplicate index");
    }

    IndexSet(std::initializer_list<int> indices)
        : IndexSet(std::vector<int>(indices)) {}

    int size() const { return static_cast<int>(idx_.size()); }
    bool empty() const { return idx_.empty(); }
    int operator[](int i) const { return idx_[static_cast<size_t>(i)]; }

    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }
    const std::vector<int>& indices() const { return idx_; }

    bool contains(int j) const {
        return std::binary_search(idx_.begin(), idx_.end(), j);
    }

    bool is_subset_of(const IndexSet& other) const {
        return std::includes(other.idx_.begin(), other.idx_.end(),
                             idx_.begin(), idx_.end());
    }

    IndexSet unite(const IndexSet& other) const {
        std::vector<int> out;
        out.reserve(idx_.size() + other.idx_.size());
        std::set_union(idx_.begin(), idx_.end(), other.idx_.begin(),
                       other.idx_.end(), std::back_inserter(out));
        IndexSet r;
        r.idx_ = std::move(out);
        return r;
    }

    IndexSet minus(const IndexSet& other) const {
        std::vector<int> out;
        std::set_difference(idx_.begin(), idx_.end(), other.idx_.begin(),
                            other.idx_.end(), std::back_inserter(out));
        IndexSet r;
        r.idx_ = std::move(out);
        return r;
    }

    IndexSet intersect(const IndexSet& other) const {
        std::vector<int> out;
        std::set_intersection(idx_.begin(), idx_.end(), other.idx_.begin(),
                              other.idx_.end(), std::back_inserter(out));
        IndexSet r;
        r.idx_ = std::move(out);
        return r;
    }

    int intersect_count(const IndexSet& other) const {
        return intersect(other).size();
    }

    /// All indices in [0, n) not present in this set.
    IndexSet complement(int n) const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(n) - idx_.size());
        size_t p = 0;
        for (int j = 0; j < n; ++j) {
            if (p < idx_.size() && idx_[p] == j) {
                ++p;
            } else {
                out.push_back(j);
            }
        }
        IndexSet r;
        r.idx_ = std::move(out);
        return r;
    }

    bool operator==(const IndexSet& other) const { return idx_ == other.idx_; }
    bool operator!=(const IndexSet& other) const { return idx_ != other.idx_; }

    std::string to_string() const {
        std::string s = "{";
        for (size_t i = 0; i < idx_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(idx_[i]);
        }
        return s + "}";
    }

private:
    std::vector<int> idx_;
};

} // namespace gomplab
