#include "rmcodes/codebook.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmcodes {

Permutation Codebook::info_of(const Permutation& c) const {
    if (c.n() != n) throw std::invalid_argument("info_of: codeword length mismatch");
    const IndexSet head = first_k(n, k);
    return metric == Metric::kendall ? project_values(c, head) : project_coords(c, head);
}

void Codebook::sort_by_info() {
    std::sort(codewords.begin(), codewords.end(),
              [this](const Permutation& a, const Permutation& b) { return info_of(a) < info_of(b); });
}

}  // namespace rmcodes
