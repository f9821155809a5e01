#include "symdelta/ground_set.hpp"

#include <bit>
#include <unordered_set>

namespace symdelta {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > 64)
        throw GroundSetTooLarge("ground sets are limited to 64 elements");
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_) {
        if (l.empty())
            throw InvalidArgument("empty ground set label");
        if (!seen.insert(l).second)
            throw InvalidArgument("duplicate ground set label: " + l);
    }
}

GroundSet GroundSet::range(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i)
        labels.push_back(std::to_string(i));
    return GroundSet(std::move(labels));
}

int GroundSet::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return static_cast<int>(i);
    return -1;
}

std::uint64_t GroundSet::full_mask() const {
    return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
}

std::vector<std::string> GroundSet::subset_labels(std::uint64_t mask) const {
    std::vector<std::string> out;
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
        out.push_back(label(std::countr_zero(m)));
    return out;
}

} // namespace symdelta
