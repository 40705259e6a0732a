#pragma once

#include <vector>

namespace dottie {

/// One term of a partition sum: multiplicities[j-1] is the number of
/// parts equal to j in an integer partition of the weight k, so
/// sum_j j*m_j == k. The derived quantity S = sum_j m_j is the total
/// number of parts.
struct PartitionMultiIndex {
    std::vector<unsigned> multiplicities;  // size k; index j-1 holds m_j

    unsigned weight() const {
        unsigned w = 0;
        for (size_t j = 0; j < multiplicities.size(); ++j)
            w += static_cast<unsigned>(j + 1) * multiplicities[j];
        return w;
    }

    unsigned part_count() const {
        unsigned s = 0;
        for (unsigned m : multiplicities) s += m;
        return s;
    }

    bool operator==(const PartitionMultiIndex&) const = default;
};

/// Every multiplicity vector with sum_j j*m_j == k, exactly once, in
/// ascending lexicographic order of (m_1, m_2, ..., m_k). k == 0 yields
/// the single empty partition.
std::vector<PartitionMultiIndex> enumerate_partitions(unsigned k);

}  // namespace dottie
