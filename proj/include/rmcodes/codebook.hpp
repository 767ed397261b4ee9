#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rmcodes/permutation.hpp"

namespace rmcodes {

/// A materialized code: |C| codewords in S_n carrying k information symbols,
/// with a claimed minimum distance under the stated metric. Codewords are kept
/// sorted by the lexicographic order of their information permutations, so a
/// rebuilt codebook is byte-for-byte reproducible.
struct Codebook {
    int n = 0;
    int k = 0;
    int d_claimed = 0;
    Metric metric = Metric::kendall;
    std::string construction;  // "c1", "c2", "rho", "c3", "c4", "c5", "c6", "c7"
    /// Construction-specific header fields (e.g. {"m","5"}), in output order.
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Permutation> codewords;

    /// The information permutation carried by a codeword: the relabeled
    /// restriction to the k smallest values (Kendall constructions) or to the
    /// first k coordinates (l-infinity constructions).
    Permutation info_of(const Permutation& c) const;

    /// Sorts codewords by information permutation; call after building.
    void sort_by_info();
};

}  // namespace rmcodes
