#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rmcodes/codebook.hpp"
#include "rmcodes/permutation.hpp"

namespace rmcodes {
namespace oracle {

/// Exact minimum pairwise distance of a codebook under its metric, by full
/// pairwise scan. workers > 1 splits the scan across threads; the result is
/// identical regardless of the worker count.
int min_distance(const Codebook& cb, int workers = 1);

/// True iff the codebook has exactly k! codewords and their information
/// projections are pairwise distinct (every information permutation appears
/// exactly once).
bool check_systematic(const Codebook& cb);

using Decoder = std::function<std::optional<Permutation>(const Permutation&)>;

struct DecodeFailure {
    Permutation codeword;
    Permutation received;
    std::optional<Permutation> decoded;  // nullopt = reported uncorrectable
};

struct VerificationReport {
    std::string codebook_id;
    long long trials = 0;
    std::vector<DecodeFailure> failures;
    double elapsed_seconds = 0.0;
    bool passed() const { return failures.empty(); }
};

/// Feeds the decoder every word within the given radius of each tested
/// codeword and records any outcome that is not the codeword's information
/// permutation. sample_count > 0 tests a deterministic pseudo-random sample of
/// that many codewords instead of all of them.
VerificationReport exhaustive_decode_test(const Codebook& cb, const Decoder& decoder, int radius,
                                          long long sample_count = 0, unsigned seed = 20120817);

/// The codeword closest to g (first one in codebook order on ties).
Permutation nearest_codeword(const Permutation& g, const Codebook& cb);

/// All permutations within max-norm radius r of the center, by per-coordinate
/// perturbation with a distinctness filter; equivalent to filtering S_n but
/// usable at large n for small r.
std::vector<Permutation> linf_ball(const Permutation& center, int r);

}  // namespace oracle
}  // namespace rmcodes
