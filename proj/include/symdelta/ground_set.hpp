#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symdelta/errors.hpp"

namespace symdelta {

/// Ordered set of distinct element labels.  The order is fixed at
/// construction and defines coordinate indices everywhere else.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    /// Labels "1".."n".
    static GroundSet range(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Index of a label, -1 if absent.
    int index_of(std::string_view label) const;
    bool contains(std::string_view label) const { return index_of(label) >= 0; }

    /// Mask with one bit per element.
    std::uint64_t full_mask() const;

    /// Labels selected by a bit mask, in ground order.
    std::vector<std::string> subset_labels(std::uint64_t mask) const;

    bool operator==(const GroundSet&) const = default;

private:
    std::vector<std::string> labels_;
};

} // namespace symdelta
