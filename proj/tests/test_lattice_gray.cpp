#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "rmcodes/bch_lattice.hpp"
#include "rmcodes/gf.hpp"
#include "rmcodes/gray_embed.hpp"
#include "rmcodes/oracle.hpp"

using namespace rmcodes;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

}  // namespace

TEST_CASE("irreducibility testing") {
    CHECK(is_irreducible_monic(2, {1, 1}));      // x^2 + x + 1
    CHECK(!is_irreducible_monic(2, {1, 0}));     // x^2 + 1 = (x + 1)^2
    CHECK(is_irreducible_monic(2, {1, 1, 0}));   // x^3 + x + 1
    CHECK(!is_irreducible_monic(2, {1, 1, 1}));  // x^3 + x^2 + x + 1 has root 1
    CHECK(is_irreducible_monic(5, {2, 0}));      // x^2 + 2: -2 = 3 is a nonresidue mod 5
    CHECK(!is_irreducible_monic(5, {1, 0}));     // x^2 + 1 = (x + 2)(x + 3)
    CHECK(is_irreducible_monic(7, {4}));         // degree 1 is always irreducible
}

TEST_CASE("canonical modulus choice") {
    CHECK(FieldContext(2, 2).modulus_low() == std::vector<int>{1, 1});
    CHECK(FieldContext(2, 3).modulus_low() == std::vector<int>{1, 1, 0});
    CHECK(FieldContext(3, 2).modulus_low() == std::vector<int>{1, 0});
    CHECK(FieldContext(5, 2).modulus_low() == std::vector<int>{2, 0});
    CHECK(FieldContext(5, 2).size() == 25);
    CHECK(FieldContext(2, 3).size() == 8);

    CHECK_NOTHROW(FieldContext(5, 2, {2, 0}));
    CHECK_THROWS_AS(FieldContext(5, 2, {1, 0}), std::invalid_argument);  // reducible
    CHECK_THROWS_AS(FieldContext(5, 2, {2}), std::invalid_argument);     // wrong length
    CHECK_THROWS_AS(FieldContext(5, 2, {5, 0}), std::invalid_argument);  // coefficient range
    CHECK_THROWS_AS(FieldContext(4, 2), std::invalid_argument);          // p not prime
    CHECK_THROWS_AS(FieldContext(2, 0), std::invalid_argument);
}

TEST_CASE("field element indexing") {
    const FieldContext f(3, 2);
    for (int i = 0; i < f.size(); ++i) CHECK(f.index_of(f.element(i)) == i);
    CHECK(f.element(0) == f.zero());
    CHECK(f.element(1) == f.one());
    CHECK(f.element(5) == FieldContext::Element{2, 1});  // 2 + x
    CHECK_THROWS_AS(f.element(9), std::invalid_argument);
    CHECK_THROWS_AS(f.index_of({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
    const FieldContext f4(2, 2);  // modulus x^2 + x + 1
    const FieldContext::Element alpha{0, 1};
    CHECK(f4.mul(alpha, alpha) == FieldContext::Element{1, 1});  // x^2 = x + 1
    CHECK(f4.pow(alpha, 3) == f4.one());

    // Fermat: a^(q-1) = 1 for every nonzero a.
    for (const FieldContext& f : {FieldContext(2, 3), FieldContext(3, 2), FieldContext(5, 2)}) {
        for (int i = 1; i < f.size(); ++i)
            CHECK(f.pow(f.element(i), f.size() - 1) == f.one());
        CHECK(f.is_zero(f.pow(f.zero(), 2)));
    }

    const FieldContext f27(3, 3);
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        const auto a = f27.element(static_cast<int>(rng() % 27));
        const auto b = f27.element(static_cast<int>(rng() % 27));
        const auto c = f27.element(static_cast<int>(rng() % 27));
        CHECK(f27.mul(a, b) == f27.mul(b, a));
        CHECK(f27.mul(f27.mul(a, b), c) == f27.mul(a, f27.mul(b, c)));
        CHECK(f27.mul(a, f27.add(b, c)) == f27.add(f27.mul(a, b), f27.mul(a, c)));
        CHECK(f27.sub(f27.add(a, b), b) == a);
    }
}

TEST_CASE("lattice code construction") {
    const BchLatticeCodeSpec spec = c3_build(5, 2, 1, 9);
    CHECK(spec.n == 9);
    CHECK(spec.k == 6);  // parity rank 3: block j=0 contributes a single nonzero row
    CHECK(spec.t == 1);
    CHECK(spec.h.size() == 4);
    CHECK(spec.a.size() == 6);
    CHECK(spec.a[0].size() == 3);
    CHECK(spec.field.p() <= spec.k + 2);

    CHECK_THROWS_AS(c3_build(4, 2, 1, 9), std::invalid_argument);    // p not prime
    CHECK_THROWS_AS(c3_build(5, 1, 1, 9), std::invalid_argument);    // m too small
    CHECK_THROWS_AS(c3_build(5, 2, 2, 9), std::invalid_argument);    // 2t > p - 3
    CHECK_THROWS_AS(c3_build(5, 2, 1, 4), std::invalid_argument);    // n below p^(m-1)
    CHECK_THROWS_AS(c3_build(5, 2, 1, 25), std::invalid_argument);   // n above p^m - 1
    CHECK_THROWS_AS(c3_build(5, 2, 1, 9, std::vector<int>{1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(c3_build(5, 2, 1, 9, std::vector<int>{1, 1, 2, 3, 4, 5, 6, 7, 8}),
                    std::invalid_argument);
    CHECK_THROWS_AS(c3_build(5, 2, 1, 9, std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8}),
                    std::invalid_argument);
}

TEST_CASE("lattice codewords have zero syndrome and decode back") {
    const BchLatticeCodeSpec spec = c3_build(5, 2, 1, 9);
    std::mt19937 rng(31);
    int checked = 0;
    for_each_permutation(7, [&](const Permutation& f) {
        if (rng() % 50 != 0) return true;  // ~100 random information words
        const Permutation c = c3_encode(f, spec);
        CHECK(c.n() == 10);

        const Factoradic d = phi(c);
        std::vector<int> digits;
        for (int i = 2; i <= 10; ++i) digits.push_back(d.digit(i));
        const std::vector<int> syn = c3_syndrome(digits, spec);
        CHECK(std::all_of(syn.begin(), syn.end(), [](int v) { return v == 0; }));
        // Information digits pass through.
        for (int i = 1; i <= 7; ++i) CHECK(d.digit(i) == phi(f).digit(i));

        const auto out = c3_decode(c, spec);
        REQUIRE(out.has_value());
        CHECK(*out == f);
        ++checked;
        return true;
    });
    CHECK(checked > 50);
}

TEST_CASE("lattice code corrects single transpositions") {
    const BchLatticeCodeSpec spec = c3_build(5, 2, 1, 9);
    std::mt19937 rng(37);
    for (int it = 0; it < 12; ++it) {
        std::vector<int> v{1, 2, 3, 4, 5, 6, 7};
        std::shuffle(v.begin(), v.end(), rng);
        const Permutation f(std::move(v));
        const Permutation c = c3_encode(f, spec);
        for (const Permutation& g : ball_enumerate(c, 1, Metric::kendall)) {
            const auto out = c3_decode(g, spec);
            REQUIRE(out.has_value());
            CHECK(*out == f);
        }
    }
}

TEST_CASE("lattice decoder rejects double digit errors") {
    const BchLatticeCodeSpec spec = c3_build(5, 2, 1, 9);
    const Permutation c = c3_encode(Permutation::identity(7), spec);
    std::vector<int> digits = phi(c).digits();
    // Bump two digits with room below their radix; distance 4 makes the result
    // unexplainable by any single error around any codeword.
    int bumped = 0;
    for (size_t i = 4; i < digits.size() && bumped < 2; ++i) {
        if (digits[i] + 1 <= static_cast<int>(i)) {
            digits[i] += 1;
            ++bumped;
        }
    }
    REQUIRE(bumped == 2);
    CHECK(!c3_decode(phi_inverse(Factoradic(digits)), spec).has_value());
}

TEST_CASE("dependent trailing columns trigger the documented reordering") {
    // Field indices 1, 2, 3 are the constants 1, 2, 3; their parity columns
    // span two dimensions, so placing them last breaks the direct systematic
    // form and forces the column reorder.
    const std::vector<int> alphas{5, 6, 7, 8, 9, 10, 1, 2, 3};
    const BchLatticeCodeSpec spec = c3_build(5, 2, 1, 9, alphas);
    CHECK(spec.k == 6);
    std::vector<int> sorted_order = spec.column_order;
    std::sort(sorted_order.begin(), sorted_order.end());
    for (int i = 0; i < 9; ++i) CHECK(sorted_order[static_cast<size_t>(i)] == i);
    CHECK(spec.column_order != sorted_order);  // reorder actually happened

    const Permutation f = P({3, 1, 4, 2, 6, 5, 7});
    const Permutation c = c3_encode(f, spec);
    const auto out = c3_decode(c, spec);
    REQUIRE(out.has_value());
    CHECK(*out == f);
    for (const Permutation& g : ball_enumerate(c, 1, Metric::kendall)) {
        const auto o = c3_decode(g, spec);
        REQUIRE(o.has_value());
        CHECK(*o == f);
    }
}

TEST_CASE("lattice codebook") {
    const BchLatticeCodeSpec spec = c3_build(5, 2, 1, 9);
    const Codebook cb = build_c3_codebook(spec);
    CHECK(cb.n == 10);
    CHECK(cb.k == 7);
    CHECK(cb.d_claimed == 4);
    CHECK(cb.construction == "c3");
    CHECK(cb.codewords.size() == 5040);
    CHECK(oracle::check_systematic(cb));
}

TEST_CASE("reflected binary map") {
    CHECK(gray_map(0, 2) == std::vector<int>{0, 0});
    CHECK(gray_map(1, 2) == std::vector<int>{0, 1});
    CHECK(gray_map(2, 2) == std::vector<int>{1, 1});
    CHECK(gray_map(3, 2) == std::vector<int>{1, 0});
    CHECK(gray_map(0, 0).empty());
    CHECK_THROWS_AS(gray_map(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(gray_map(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(gray_unmap(std::vector<int>{0, 2}), std::invalid_argument);

    for (int m = 0; m <= 8; ++m)
        for (int v = 0; v < (1 << m); ++v) CHECK(gray_unmap(gray_map(v, m)) == v);

    // Distance contraction: hamming(gray(a), gray(b)) <= |a - b|.
    for (int a = 0; a < 32; ++a)
        for (int b = 0; b < 32; ++b) {
            const auto ga = gray_map(a, 5), gb = gray_map(b, 5);
            int h = 0;
            for (int j = 0; j < 5; ++j) h += ga[static_cast<size_t>(j)] != gb[static_cast<size_t>(j)];
            CHECK(h <= std::abs(a - b));
            if (std::abs(a - b) == 1) CHECK(h == 1);
        }
}

TEST_CASE("digit widths") {
    CHECK(lambda_width(1, 5) == 0);
    CHECK(lambda_width(2, 5) == 1);
    CHECK(lambda_width(3, 5) == 2);
    CHECK(lambda_width(4, 5) == 2);
    CHECK(lambda_width(5, 5) == 3);
    CHECK(lambda_width(6, 5) == 2);
    CHECK(lambda_width(7, 5) == 2);
    CHECK(lambda_width(8, 5) == 3);
    CHECK_THROWS_AS(lambda_width(0, 5), std::invalid_argument);
}

TEST_CASE("binary block codes") {
    const BinaryCodeSpec h3 = BinaryCodeSpec::hamming(3);
    CHECK(h3.n_bits == 7);
    CHECK(h3.k_bits == 4);
    CHECK(h3.d_min == 3);

    // Minimum nonzero codeword weight is exactly 3.
    int minw = h3.n_bits;
    for (int u = 1; u < (1 << h3.k_bits); ++u) {
        std::vector<int> info(static_cast<size_t>(h3.k_bits));
        for (int i = 0; i < h3.k_bits; ++i) info[static_cast<size_t>(i)] = (u >> i) & 1;
        const std::vector<int> w = h3.encode(info);
        int weight = 0;
        for (int b : w) weight += b;
        minw = std::min(minw, weight);
    }
    CHECK(minw == 3);

    // Every single bit error is corrected.
    std::vector<int> info{1, 0, 1, 1};
    const std::vector<int> word = h3.encode(info);
    CHECK(h3.decode_info(word) == info);
    for (int e = 0; e < h3.n_bits; ++e) {
        std::vector<int> bad = word;
        bad[static_cast<size_t>(e)] ^= 1;
        CHECK(h3.decode_info(bad) == info);
    }

    const BinaryCodeSpec rep = BinaryCodeSpec::repetition3();
    CHECK(rep.n_bits == 3);
    CHECK(rep.decode_info({1, 0, 1}) == std::vector<int>{1});
    CHECK(rep.decode_info({0, 0, 1}) == std::vector<int>{0});

    const BinaryCodeSpec s = BinaryCodeSpec::hamming(4).shortened(3);
    CHECK(s.n_bits == 12);
    CHECK(s.k_bits == 8);
    CHECK(s.shorten_count == 3);
    // Shortened encoding = full encoding of the zero-padded information.
    const BinaryCodeSpec h4 = BinaryCodeSpec::hamming(4);
    std::vector<int> short_info{1, 1, 0, 1, 0, 0, 1, 0};
    std::vector<int> padded{0, 0, 0};
    padded.insert(padded.end(), short_info.begin(), short_info.end());
    const std::vector<int> full = h4.encode(padded);
    const std::vector<int> sw = s.encode(short_info);
    CHECK(std::equal(sw.begin(), sw.end(), full.begin() + 3));

    // A distance claim the parity matrix cannot honor is rejected outright.
    CHECK_THROWS_AS(BinaryCodeSpec(3, std::vector<std::vector<int>>{{1, 0}, {0, 1}}),
                    std::invalid_argument);
    CHECK_NOTHROW(BinaryCodeSpec(1, std::vector<std::vector<int>>{{1, 0}, {0, 1}}));
    CHECK_THROWS_AS(h3.decode_info({1, 0, 1}), std::invalid_argument);  // wrong length
    CHECK_THROWS_AS(BinaryCodeSpec::hamming(1), std::invalid_argument);
    CHECK_THROWS_AS(h3.shortened(4), std::invalid_argument);
}

TEST_CASE("embedding parameter search") {
    const auto h4 = c4_find_params(BinaryCodeSpec::hamming(4));
    REQUIRE(h4.has_value());
    CHECK(h4->n == 7);
    CHECK(h4->k == 5);
    CHECK(h4->binary.shorten_count == 3);
    CHECK(h4->binary.k_bits == 8);

    const auto h3 = c4_find_params(BinaryCodeSpec::hamming(3));
    REQUIRE(h3.has_value());
    CHECK(h3->n == 4);
    CHECK(h3->k == 2);
    CHECK(h3->binary.shorten_count == 3);

    CHECK(!c4_find_params(BinaryCodeSpec::repetition3()).has_value());
}

TEST_CASE("embedded code round trips and corrects single transpositions") {
    const GrayEmbedSpec spec = *c4_find_params(BinaryCodeSpec::hamming(4));
    for_each_permutation(5, [&](const Permutation& f) {
        const Permutation c = c4_encode(f, spec);
        CHECK(c.n() == 7);

        // The bit image of a codeword is a binary codeword.
        const std::vector<int> image = c4_bit_image(c, spec);
        const auto back = spec.binary.decode_info(image);
        REQUIRE(back.has_value());
        CHECK(spec.binary.encode(*back) == image);

        for (const Permutation& g : ball_enumerate(c, 1, Metric::kendall)) {
            const auto out = c4_decode(g, spec);
            REQUIRE(out.has_value());
            CHECK(*out == f);
        }
        return true;
    });
}

TEST_CASE("embedded decoder clamps oversized redundancy digits") {
    const GrayEmbedSpec spec = *c4_find_params(BinaryCodeSpec::hamming(4));
    // Find a codeword whose digit at position 6 is at the clamp threshold 3;
    // bumping it to 4 models a transposition that leaves the width range.
    bool found = false;
    for_each_permutation(5, [&](const Permutation& f) {
        const Permutation c = c4_encode(f, spec);
        std::vector<int> digits = phi(c).digits();
        if (digits[5] != 3) return true;
        digits[5] = 4;
        const auto out = c4_decode(phi_inverse(Factoradic(digits)), spec);
        REQUIRE(out.has_value());
        CHECK(*out == f);
        found = true;
        return false;
    });
    CHECK(found);
}

TEST_CASE("embedded codebook") {
    const GrayEmbedSpec spec = *c4_find_params(BinaryCodeSpec::hamming(4));
    const Codebook cb = build_c4_codebook(spec);
    CHECK(cb.n == 7);
    CHECK(cb.k == 5);
    CHECK(cb.d_claimed == 3);
    CHECK(cb.construction == "c4");
    CHECK(cb.codewords.size() == 120);
    CHECK(oracle::check_systematic(cb));
    CHECK(oracle::min_distance(cb) >= 3);
}
