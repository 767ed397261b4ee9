#pragma once

#include <optional>
#include <vector>

#include "rmcodes/codebook.hpp"
#include "rmcodes/gf.hpp"
#include "rmcodes/permutation.hpp"

namespace rmcodes {

/// A t-error-correcting code on inversion-table digit vectors of length n,
/// obtained by flattening a (t+1) x n parity matrix of powers of n distinct
/// nonzero field elements alpha_i in GF(p^m) into a ((t+1)m) x n matrix over
/// Z_p and intersecting its integer kernel lattice with the digit box.
/// Codewords are permutations in S_{n+1}; the information permutation lives in
/// S_{k+1} where k = n - rank.
struct BchLatticeCodeSpec {
    FieldContext field;
    int t = 0;
    int n = 0;
    int k = 0;
    /// Field indices of alpha_1..alpha_n in evaluation order. When Gaussian
    /// elimination cannot place all pivots on the last n-k columns with the
    /// default order, the alphas are reordered once (free columns first) and
    /// column_order records where each evaluation column came from.
    std::vector<int> alpha_indices;
    std::vector<int> column_order;
    /// Flattened parity matrix over Z_p, (t+1)*m rows by n columns.
    std::vector<std::vector<int>> h;
    /// Systematic part: redundancy digits are (u mod p) * a, k x (n-k).
    std::vector<std::vector<int>> a;
};

/// Builds the code. Requires p prime, m >= 2, 1 <= t <= (p-3)/2, and
/// max(p^(m-1), p + t*m - 1) <= n <= p^m - 1.
BchLatticeCodeSpec c3_build(int p, int m, int t, int n,
                            std::optional<std::vector<int>> alpha_indices = std::nullopt);

/// Encodes the digit vector [0, v_2, ..., v_{k+1}] of an information
/// permutation in S_{k+1} into a codeword permutation in S_{n+1}.
Permutation c3_encode(const Factoradic& u, const BchLatticeCodeSpec& spec);
Permutation c3_encode(const Permutation& f_info, const BchLatticeCodeSpec& spec);

/// Bounded-distance decoding: searches all digit error vectors of l1 weight
/// <= t. Returns the information permutation when exactly one codeword
/// explains the received word within that radius.
std::optional<Permutation> c3_decode(const Permutation& g, const BchLatticeCodeSpec& spec);

/// H * c over Z_p for a digit vector c of length n.
std::vector<int> c3_syndrome(const std::vector<int>& digits, const BchLatticeCodeSpec& spec);

Codebook build_c3_codebook(const BchLatticeCodeSpec& spec);

}  // namespace rmcodes
