#include "dottie/partitions.hpp"

namespace dottie {

namespace {

void extend(std::vector<PartitionMultiIndex>& out, std::vector<unsigned>& m, unsigned part,
            unsigned k, unsigned remaining) {
    if (part > k) {
        if (remaining == 0) out.push_back(PartitionMultiIndex{m});
        return;
    }
    if (part == k) {
        // Last slot: m_k is forced (or impossible).
        if (remaining % part == 0) {
            m[part - 1] = remaining / part;
            out.push_back(PartitionMultiIndex{m});
            m[part - 1] = 0;
        }
        return;
    }
    for (unsigned count = 0; count * part <= remaining; ++count) {
        m[part - 1] = count;
        extend(out, m, part + 1, k, remaining - count * part);
    }
    m[part - 1] = 0;
}

}  // namespace

std::vector<PartitionMultiIndex> enumerate_partitions(unsigned k) {
    std::vector<PartitionMultiIndex> out;
    if (k == 0) {
        out.push_back(PartitionMultiIndex{});
        return out;
    }
    std::vector<unsigned> m(k, 0);
    extend(out, m, 1, k, k);
    return out;
}

}  // namespace dottie
