#pragma once

#include <optional>
#include <span>

#include "rmcodes/codebook.hpp"
#include "rmcodes/permutation.hpp"

namespace rmcodes {

/// Parameters of a weighted-power-sum redundancy code: k information symbols,
/// r redundancy symbols, digits computed modulo a prime m in {k, k+1}.
/// Codewords live in S_{k+r} and carry one extra inversion-table digit per
/// redundancy position.
struct RhoCodeSpec {
    int k = 0;
    int r = 0;
    int m = 0;

    RhoCodeSpec(int k, int r, int m);
    int n() const { return k + r; }
};

/// Preferred modulus for a given k: m = k when k is prime, else k + 1
/// (which must then be prime). Throws if neither is prime.
int default_rho_modulus(int k);

/// rho_j(f) = (sum_i (2i-1)^j f(i)) mod m over the information permutation f.
int rho(const Permutation& f, int j, int m);

/// Appends digits rho_1..rho_r of the information permutation to its
/// inversion table and rebuilds the codeword in S_{k+r}.
Permutation rho_encode(const Permutation& f_info, const RhoCodeSpec& spec);

/// Single-error-correcting two-redundancy encoder: appends digits rho_1, rho_2
/// of the information permutation to its inversion table. Requires spec.r == 2.
Permutation c1_encode(const Permutation& f_info, const RhoCodeSpec& spec);

/// Intermediates of a c1 decode, for inspection.
struct C1DecodeTrace {
    int received_digit_1 = 0, received_digit_2 = 0;  // last two digits of phi(g)
    int reencoded_digit_1 = 0, reencoded_digit_2 = 0;
    int swap_index = 0;  // recovered adjacent-transposition position, 0 if none
};

/// Decodes a received permutation assuming at most one adjacent transposition
/// happened. Returns the information permutation, or nullopt when the
/// single-error assumption is untenable.
std::optional<Permutation> c1_decode(const Permutation& g, const RhoCodeSpec& spec,
                                     C1DecodeTrace* trace = nullptr);

/// Parameters of the single-error code built from a perfect Lee-metric code:
/// k information symbols, 2 redundancy symbols, working modulo 2k + 3.
struct GW2CodeSpec {
    int k = 0;
    explicit GW2CodeSpec(int k);
    int n() const { return k + 2; }
    int modulus() const { return 2 * k + 3; }
};

/// Weighted digit sum sum_i i * x_i mod (2k + 3).
int gw_syndrome(std::span<const int> x, int k);
int gw_syndrome(const std::vector<int>& x, int k);

Permutation c2_encode(const Permutation& f_info, const GW2CodeSpec& spec);
std::optional<Permutation> c2_decode(const Permutation& g, const GW2CodeSpec& spec);

/// Materializes the weighted-power-sum code with r redundancy digits
/// rho_1..rho_r. For r == 2 the claimed distance is 3; for other r the
/// minimum distance is measured over the built codebook.
Codebook rho_code_build(const RhoCodeSpec& spec);

Codebook build_c1_codebook(int k, int m);
Codebook build_c2_codebook(int k);

/// Greedy codebook search: scans S_n in lexicographic order, keeping each
/// permutation whose distance to all kept codewords is >= d and whose
/// information projection is new, until k! codewords are found. Returns
/// nullopt when the scan is exhausted first.
std::optional<Codebook> c5_greedy(int n, int k, int d);

}  // namespace rmcodes
