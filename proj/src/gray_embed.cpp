#include "rmcodes/gray_embed.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "rmcodes/numeric.hpp"

namespace rmcodes {

std::vector<int> gray_map(int value, int m) {
    if (m < 0 || m > 30) throw std::invalid_argument("gray_map: width out of range");
    if (value < 0 || (m < 31 && value >= (1 << m)))
        throw std::invalid_argument("gray_map: value out of range for width");
    const unsigned g = static_cast<unsigned>(value) ^ (static_cast<unsigned>(value) >> 1);
    std::vector<int> bits(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) bits[static_cast<size_t>(j)] = static_cast<int>((g >> (m - 1 - j)) & 1u);
    return bits;
}

int gray_unmap(const std::vector<int>& bits) {
    if (bits.size() > 30) throw std::invalid_argument("gray_unmap: width out of range");
    int prev = 0;
    unsigned v = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("gray_unmap: non-bit entry");
        prev ^= b;  // binary bit = prefix XOR of Gray bits
        v = (v << 1) | static_cast<unsigned>(prev);
    }
    return static_cast<int>(v);
}

namespace {

unsigned word_syndrome(const std::vector<int>& word, const BinaryCodeSpec& c) {
    const int red = c.n_bits - c.k_bits;
    unsigned s = 0;
    for (int i = 0; i < c.k_bits; ++i) {
        if (!word[static_cast<size_t>(i)]) continue;
        for (int j = 0; j < red; ++j)
            if (c.parity[static_cast<size_t>(i)][static_cast<size_t>(j)])
                s ^= 1u << j;
    }
    for (int j = 0; j < red; ++j)
        if (word[static_cast<size_t>(c.k_bits + j)]) s ^= 1u << j;
    return s;
}

unsigned position_syndrome(int pos, const BinaryCodeSpec& c) {
    const int red = c.n_bits - c.k_bits;
    unsigned s = 0;
    if (pos < c.k_bits) {
        for (int j = 0; j < red; ++j)
            if (c.parity[static_cast<size_t>(pos)][static_cast<size_t>(j)]) s ^= 1u << j;
    } else {
        s = 1u << (pos - c.k_bits);
    }
    return s;
}

// All error patterns of weight <= t, keyed by syndrome. A collision between
// two distinct such patterns certifies a codeword of weight < d_min, so it is
// rejected as an inconsistent distance claim.
std::map<unsigned, std::vector<int>> build_syndrome_table(const BinaryCodeSpec& c) {
    const int t = (c.d_min - 1) / 2;
    std::map<unsigned, std::vector<int>> table;
    std::vector<int> pattern;
    auto visit = [&](auto&& self, int start, int remaining, unsigned syn) -> void {
        if (!table.emplace(syn, pattern).second)
            throw std::invalid_argument(
                "BinaryCodeSpec: claimed minimum distance is inconsistent with the parity matrix");
        if (remaining == 0) return;
        for (int pos = start; pos < c.n_bits; ++pos) {
            pattern.push_back(pos);
            self(self, pos + 1, remaining - 1, syn ^ position_syndrome(pos, c));
            pattern.pop_back();
        }
    };
    visit(visit, 0, t, 0u);
    return table;
}

}  // namespace

BinaryCodeSpec::BinaryCodeSpec(int d_min_, std::vector<std::vector<int>> parity_, int shorten_count_)
    : d_min(d_min_), shorten_count(shorten_count_), parity(std::move(parity_)) {
    if (d_min < 1) throw std::invalid_argument("BinaryCodeSpec: d_min must be >= 1");
    if (shorten_count < 0) throw std::invalid_argument("BinaryCodeSpec: negative shorten count");
    k_bits = static_cast<int>(parity.size());
    if (k_bits < 1) throw std::invalid_argument("BinaryCodeSpec: need at least one information bit");
    const int red = static_cast<int>(parity[0].size());
    if (red < 1 || red > 25) throw std::invalid_argument("BinaryCodeSpec: redundancy out of range");
    for (const auto& row : parity) {
        if (static_cast<int>(row.size()) != red)
            throw std::invalid_argument("BinaryCodeSpec: ragged parity matrix");
        for (int b : row)
            if (b != 0 && b != 1) throw std::invalid_argument("BinaryCodeSpec: non-bit parity entry");
    }
    n_bits = k_bits + red;
    decode_table_ = build_syndrome_table(*this);  // also validates the distance claim
}

BinaryCodeSpec BinaryCodeSpec::hamming(int r) {
    if (r < 2 || r > 12) throw std::invalid_argument("BinaryCodeSpec::hamming: need 2 <= r <= 12");
    std::vector<std::vector<int>> parity;
    for (int v = 3; v < (1 << r); ++v) {
        if ((v & (v - 1)) == 0) continue;  // powers of two serve as parity columns
        std::vector<int> row(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j) row[static_cast<size_t>(j)] = (v >> j) & 1;
        parity.push_back(std::move(row));
    }
    return BinaryCodeSpec(3, std::move(parity));
}

BinaryCodeSpec BinaryCodeSpec::repetition3() {
    return BinaryCodeSpec(3, {{1, 1}});
}

BinaryCodeSpec BinaryCodeSpec::shortened(int s) const {
    if (s < 0 || s >= k_bits) throw std::invalid_argument("BinaryCodeSpec: bad shorten count");
    if (s == 0) return *this;
    std::vector<std::vector<int>> sub(parity.begin() + s, parity.end());
    return BinaryCodeSpec(d_min, std::move(sub), shorten_count + s);
}

std::vector<int> BinaryCodeSpec::encode(const std::vector<int>& info) const {
    if (static_cast<int>(info.size()) != k_bits)
        throw std::invalid_argument("BinaryCodeSpec::encode: wrong information length");
    std::vector<int> word = info;
    const int red = n_bits - k_bits;
    for (int j = 0; j < red; ++j) {
        int b = 0;
        for (int i = 0; i < k_bits; ++i)
            b ^= info[static_cast<size_t>(i)] & parity[static_cast<size_t>(i)][static_cast<size_t>(j)];
        word.push_back(b);
    }
    return word;
}

std::optional<std::vector<int>> BinaryCodeSpec::decode_info(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) != n_bits)
        throw std::invalid_argument("BinaryCodeSpec::decode_info: wrong word length");
    const unsigned syn = word_syndrome(word, *this);
    const auto hit = decode_table_.find(syn);
    if (hit == decode_table_.end()) return std::nullopt;
    std::vector<int> fixed = word;
    for (int pos : hit->second) fixed[static_cast<size_t>(pos)] ^= 1;
    fixed.resize(static_cast<size_t>(k_bits));
    return fixed;
}

int lambda_width(int i, int k) {
    if (i < 1) throw std::invalid_argument("lambda_width: position must be >= 1");
    if (i <= k) return i == 1 ? 0 : std::bit_width(static_cast<unsigned>(i - 1));  // ceil(log2 i)
    return std::bit_width(static_cast<unsigned>(i)) - 1;                           // floor(log2 i)
}

std::optional<GrayEmbedSpec> c4_find_params(const BinaryCodeSpec& binary) {
    const int red = binary.n_bits - binary.k_bits;
    for (int s = 0; s < binary.k_bits; ++s) {
        const int kb = binary.k_bits - s;
        int k = 1, sum = 0;
        while (sum < kb) {
            ++k;
            sum += lambda_width(k, k);  // ceil(log2 k)
        }
        if (sum != kb || k < 2) continue;
        int n = k, sum2 = 0;
        while (sum2 < red) {
            ++n;
            sum2 += lambda_width(n, k);  // floor(log2 n), since n > k
        }
        if (sum2 != red) continue;
        return GrayEmbedSpec{binary.shortened(s), n, k};
    }
    return std::nullopt;
}

Permutation c4_encode(const Permutation& f_info, const GrayEmbedSpec& spec) {
    if (f_info.n() != spec.k) throw std::invalid_argument("c4_encode: information length != k");
    const Factoradic di = phi(f_info);
    std::vector<int> info_bits;
    for (int i = 1; i <= spec.k; ++i) {
        const std::vector<int> b = gray_map(di.digit(i), lambda_width(i, spec.k));
        info_bits.insert(info_bits.end(), b.begin(), b.end());
    }
    const std::vector<int> word = spec.binary.encode(info_bits);

    std::vector<int> digits = di.digits();
    size_t pos = static_cast<size_t>(spec.binary.k_bits);
    for (int i = spec.k + 1; i <= spec.n; ++i) {
        const int w = lambda_width(i, spec.k);
        const std::vector<int> slice(word.begin() + static_cast<long>(pos),
                                     word.begin() + static_cast<long>(pos + static_cast<size_t>(w)));
        digits.push_back(gray_unmap(slice));
        pos += static_cast<size_t>(w);
    }
    return phi_inverse(Factoradic(std::move(digits)));
}

std::vector<int> c4_bit_image(const Permutation& f, const GrayEmbedSpec& spec) {
    if (f.n() != spec.n) throw std::invalid_argument("c4_bit_image: length mismatch");
    const Factoradic df = phi(f);
    std::vector<int> bits;
    for (int i = 1; i <= spec.n; ++i) {
        const int w = lambda_width(i, spec.k);
        const int clamp = (1 << w) - 1;
        const std::vector<int> b = gray_map(std::min(df.digit(i), clamp), w);
        bits.insert(bits.end(), b.begin(), b.end());
    }
    return bits;
}

std::optional<Permutation> c4_decode(const Permutation& g, const GrayEmbedSpec& spec) {
    if (g.n() != spec.n) throw std::invalid_argument("c4_decode: received length != n");
    const std::optional<std::vector<int>> info_bits = spec.binary.decode_info(c4_bit_image(g, spec));
    if (!info_bits) return std::nullopt;

    std::vector<int> digits(static_cast<size_t>(spec.k));
    size_t pos = 0;
    for (int i = 1; i <= spec.k; ++i) {
        const int w = lambda_width(i, spec.k);
        const std::vector<int> slice(info_bits->begin() + static_cast<long>(pos),
                                     info_bits->begin() + static_cast<long>(pos + static_cast<size_t>(w)));
        const int d = gray_unmap(slice);
        if (d > i - 1) return std::nullopt;  // bit pattern outside the digit radix
        digits[static_cast<size_t>(i) - 1] = d;
        pos += static_cast<size_t>(w);
    }
    return phi_inverse(Factoradic(std::move(digits)));
}

Codebook build_c4_codebook(const GrayEmbedSpec& spec) {
    if (factorial(spec.k) > 1'000'000)
        throw std::invalid_argument("build_c4_codebook: k! exceeds the materialization limit");
    Codebook cb;
    cb.n = spec.n;
    cb.k = spec.k;
    cb.d_claimed = spec.binary.d_min;
    cb.metric = Metric::kendall;
    cb.construction = "c4";
    for_each_permutation(spec.k, [&](const Permutation& f) {
        cb.codewords.push_back(c4_encode(f, spec));
        return true;
    });
    cb.sort_by_info();
    return cb;
}

}  // namespace rmcodes
