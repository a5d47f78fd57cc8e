#include "genera/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace genera {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_)
        if (p <= 0) throw usage_error("partition parts must be positive");
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition();
    out.resize(static_cast<size_t>(parts_[0]));
    for (size_t i = 0; i < out.size(); ++i) {
        int count = 0;
        for (int p : parts_)
            if (p > static_cast<int>(i)) ++count;
        out[i] = count;
    }
    return Partition(std::move(out));
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw usage_error("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> current;
    // descending-first recursion emits canonical order directly
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

}  // namespace genera
