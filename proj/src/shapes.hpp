#pragma once

#include "ratfunc.hpp"

#include <vector>

namespace macuv {

// Compositions are arbitrary tuples of non-negative integers; partitions are
// weakly decreasing. Zero parts are meaningful and kept.
using Composition = std::vector<int>;

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int rank() const { return parts_.empty() ? 0 : parts_[0]; } // r = largest part
    int weight() const;
    int nonzero_length() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

Partition sort_to_partition(const Composition& mu);

// All distinct rearrangements of lambda's parts (padded/truncated to n), in
// lexicographic order.
std::vector<Composition> orbit(const Partition& lambda, int n);

// m_i(mu) = #{k : mu_k = i}, for i >= 1; multiplicity(mu, 0) counts zeros.
int multiplicity(const Composition& mu, int i);

Partition conjugate(const Partition& lambda);

// Omega_lambda(q,t) = prod_{1<=i<j<=r} (1 - q^{j-i} t^{lambda'_i - lambda'_j}).
RatFunc omega(const Partition& lambda);

// Parse "2,1" (or "" for the empty partition/composition).
Composition parse_composition(const std::string& text);

// All partitions of weight w with at most max_len parts, each part <= max_part.
std::vector<Partition> partitions_of(int w, int max_len, int max_part);

} // namespace macuv
