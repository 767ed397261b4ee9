#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rmcodes/codebook.hpp"
#include "rmcodes/permutation.hpp"

namespace rmcodes {

/// Bits of the m-bit binary reflected Gray codeword of value (MSB first).
/// Adjacent values differ in one bit; generally the Hamming distance between
/// images never exceeds |value difference|.
std::vector<int> gray_map(int value, int m);
int gray_unmap(const std::vector<int>& bits);

/// Systematic binary linear block code given by its parity submatrix
/// (codeword = info bits followed by info * parity mod 2), with a
/// bounded-distance syndrome decoder for up to (d_min - 1) / 2 bit errors.
struct BinaryCodeSpec {
    int n_bits = 0;
    int k_bits = 0;
    int d_min = 0;
    int shorten_count = 0;
    std::vector<std::vector<int>> parity;  // k_bits x (n_bits - k_bits)

    BinaryCodeSpec(int d_min, std::vector<std::vector<int>> parity, int shorten_count = 0);

    /// Binary Hamming code of redundancy r: (2^r - 1, 2^r - 1 - r, 3).
    static BinaryCodeSpec hamming(int r);
    /// (3, 1, 3) repetition code.
    static BinaryCodeSpec repetition3();

    /// Fixes the first s information bits to zero and drops them.
    BinaryCodeSpec shortened(int s) const;

    std::vector<int> encode(const std::vector<int>& info) const;
    /// Corrects up to (d_min - 1) / 2 bit errors; returns the information bits
    /// or nullopt when the syndrome matches no such error pattern.
    std::optional<std::vector<int>> decode_info(const std::vector<int>& word) const;

private:
    /// Error-position lists of weight <= (d_min - 1) / 2, keyed by syndrome.
    std::map<unsigned, std::vector<int>> decode_table_;
};

/// Digit width at position i: ceil(log2 i) for information positions
/// (i <= k), floor(log2 i) for redundancy positions.
int lambda_width(int i, int k);

/// A permutation code obtained by writing inversion-table digits through the
/// Gray map into a systematic binary code. Feasibility requires the binary
/// information length to be an exact prefix sum of ceil(log2 i) widths and
/// the binary redundancy to be an exact sum of floor(log2 i) widths.
struct GrayEmbedSpec {
    BinaryCodeSpec binary;
    int n = 0;
    int k = 0;
};

/// Searches shortenings s = 0, 1, ... of the given binary code for an exact
/// width split with k >= 2; returns the first hit or nullopt.
std::optional<GrayEmbedSpec> c4_find_params(const BinaryCodeSpec& binary);

Permutation c4_encode(const Permutation& f_info, const GrayEmbedSpec& spec);
std::optional<Permutation> c4_decode(const Permutation& g, const GrayEmbedSpec& spec);

/// Concatenated Gray images of all n digits of phi(f) (clamped to their
/// widths); for a codeword this is a binary codeword of spec.binary.
std::vector<int> c4_bit_image(const Permutation& f, const GrayEmbedSpec& spec);

Codebook build_c4_codebook(const GrayEmbedSpec& spec);

}  // namespace rmcodes
