#pragma once

#include <string>
#include <vector>

#include "genera/errors.hpp"

namespace genera {

// Integer partition in canonical form: positive parts, non-increasing.
// Canonical total order: by weight, then lexicographically with larger
// parts first, so partitions_of(4) runs (4), (3,1), (2,2), (2,1,1), (1^4).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    // disjoint union of parts (multiset merge)
    Partition merged(const Partition& other) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string str() const;  // "(2,1)"; "()" for the empty partition

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return b.parts() < a.parts();  // lex with larger parts first
    }
};

// All partitions of n in canonical order; deterministic. n = 0 gives {()}.
std::vector<Partition> partitions_of(int n);

}  // namespace genera
