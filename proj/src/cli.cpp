#include "rmcodes/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "rmcodes/bch_lattice.hpp"
#include "rmcodes/bounds.hpp"
#include "rmcodes/codebook_file.hpp"
#include "rmcodes/gray_embed.hpp"
#include "rmcodes/kendall_codes.hpp"
#include "rmcodes/linf_codes.hpp"
#include "rmcodes/numeric.hpp"
#include "rmcodes/oracle.hpp"

namespace rmcodes {

namespace {

constexpr long long kMaterializeLimit = 1'000'000;

struct Options {
    std::string construction;
    int k = 0, r = 0, m = 0, p = 0, t = 0, n = 0, d = 0;
    int hamming_r = 4;
    bool have_m = false;
    std::string out_path, in_path, info, received, checks = "distance,systematic,decode";
    int workers = 1;
    long long sample = 0;
    bool ball = false, maxk = false;
    long long radius = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BuildFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Uncorrectable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& message) {
    if (!cond) throw UsageError(message);
}

int rho_modulus(const Options& o) {
    return o.have_m ? o.m : default_rho_modulus(o.k);
}

int find_param(const Codebook& cb, const std::string& key) {
    for (const auto& [k, v] : cb.params)
        if (k == key) return std::stoi(v);
    throw UsageError("codebook header is missing required key '" + key + "'");
}

// ---- build ----------------------------------------------------------------

Codebook build_codebook(const Options& o) {
    const std::string& c = o.construction;
    if (c == "c1") {
        require(o.k > 0, "build c1: --k is required");
        return build_c1_codebook(o.k, rho_modulus(o));
    }
    if (c == "c2") {
        require(o.k > 0, "build c2: --k is required");
        return build_c2_codebook(o.k);
    }
    if (c == "rho") {
        require(o.k > 0 && o.r > 0, "build rho: --k and --r are required");
        return rho_code_build(RhoCodeSpec(o.k, o.r, rho_modulus(o)));
    }
    if (c == "c3") {
        require(o.p > 0 && o.m > 0 && o.t > 0 && o.n > 0,
                "build c3: --p, --m, --t and --n are required");
        const BchLatticeCodeSpec spec = c3_build(o.p, o.m, o.t, o.n);
        if (factorial(spec.k + 1) > kMaterializeLimit) {
            // Too many codewords to enumerate: record the construction only.
            Codebook cb;
            cb.n = spec.n + 1;
            cb.k = spec.k + 1;
            cb.d_claimed = 2 * spec.t + 2;
            cb.metric = Metric::kendall;
            cb.construction = "c3";
            cb.params = {{"p", std::to_string(o.p)},
                         {"m", std::to_string(o.m)},
                         {"t", std::to_string(o.t)},
                         {"materialized", "0"}};
            return cb;
        }
        return build_c3_codebook(spec);
    }
    if (c == "c4") {
        const auto spec = c4_find_params(BinaryCodeSpec::hamming(o.hamming_r));
        if (!spec) throw BuildFailure("build c4: no feasible shortening of the binary code");
        Codebook cb = build_c4_codebook(*spec);
        cb.params = {{"hamming_r", std::to_string(o.hamming_r)},
                     {"shorten", std::to_string(spec->binary.shorten_count)}};
        return cb;
    }
    if (c == "c5") {
        require(o.n > 0 && o.k > 0 && o.d > 0, "build c5: --n, --k and --d are required");
        const auto cb = c5_greedy(o.n, o.k, o.d);
        if (!cb) throw BuildFailure("build c5: greedy search exhausted S_n before reaching k! codewords");
        return *cb;
    }
    if (c == "c6") {
        require(o.n > 0 && o.d > 0 && o.k > 0, "build c6: --n, --d and --k are required");
        return build_c6_codebook(SpreadCodeSpec(o.n, o.d, o.k));
    }
    if (c == "c7") {
        require(o.n > 0 && o.d > 0, "build c7: --n and --d are required");
        return build_c7_codebook(ConcatCodeSpec(o.n, o.d));
    }
    throw UsageError("unknown construction: '" + c + "'");
}

// ---- encode / decode ------------------------------------------------------

Permutation parse_perm_arg(const std::string& text, const std::string& what) {
    try {
        return parse_permutation_line(text);
    } catch (const std::exception& e) {
        throw UsageError("bad " + what + ": " + e.what());
    }
}

Permutation encode_word(const Options& o, const Permutation& info) {
    const std::string& c = o.construction;
    if (c == "c1") {
        require(o.k > 0, "encode c1: --k is required");
        return c1_encode(info, RhoCodeSpec(o.k, 2, rho_modulus(o)));
    }
    if (c == "c2") {
        require(o.k > 0, "encode c2: --k is required");
        return c2_encode(info, GW2CodeSpec(o.k));
    }
    if (c == "rho") {
        require(o.k > 0 && o.r > 0, "encode rho: --k and --r are required");
        return rho_encode(info, RhoCodeSpec(o.k, o.r, rho_modulus(o)));
    }
    if (c == "c3") {
        require(o.p > 0 && o.m > 0 && o.t > 0 && o.n > 0,
                "encode c3: --p, --m, --t and --n are required");
        return c3_encode(info, c3_build(o.p, o.m, o.t, o.n));
    }
    if (c == "c4") {
        const auto spec = c4_find_params(BinaryCodeSpec::hamming(o.hamming_r));
        if (!spec) throw BuildFailure("encode c4: no feasible shortening of the binary code");
        return c4_encode(info, *spec);
    }
    if (c == "c5") {
        require(o.n > 0 && o.k > 0 && o.d > 0, "encode c5: --n, --k and --d are required");
        const auto cb = c5_greedy(o.n, o.k, o.d);
        if (!cb) throw BuildFailure("encode c5: greedy search failed for these parameters");
        for (const Permutation& cw : cb->codewords)
            if (cb->info_of(cw) == info) return cw;
        throw UsageError("encode c5: information permutation has wrong length");
    }
    if (c == "c6") {
        require(o.n > 0 && o.d > 0 && o.k > 0, "encode c6: --n, --d and --k are required");
        return c6_encode(info, SpreadCodeSpec(o.n, o.d, o.k));
    }
    if (c == "c7") {
        require(o.n > 0 && o.d > 0, "encode c7: --n and --d are required");
        return c7_encode(info, ConcatCodeSpec(o.n, o.d));
    }
    throw UsageError("unknown construction: '" + c + "'");
}

std::optional<Permutation> nearest_bounded(const Permutation& g, const Codebook& cb) {
    const Permutation best = oracle::nearest_codeword(g, cb);
    const int dist = cb.metric == Metric::kendall ? kendall_distance(g, best) : linf_distance(g, best);
    if (dist > (cb.d_claimed - 1) / 2) return std::nullopt;
    return cb.info_of(best);
}

std::optional<Permutation> decode_word(const Options& o, const Permutation& g) {
    const std::string& c = o.construction;
    if (c == "c1") {
        require(o.k > 0, "decode c1: --k is required");
        return c1_decode(g, RhoCodeSpec(o.k, 2, rho_modulus(o)));
    }
    if (c == "c2") {
        require(o.k > 0, "decode c2: --k is required");
        return c2_decode(g, GW2CodeSpec(o.k));
    }
    if (c == "rho") {
        require(o.k > 0 && o.r > 0, "decode rho: --k and --r are required");
        return nearest_bounded(g, rho_code_build(RhoCodeSpec(o.k, o.r, rho_modulus(o))));
    }
    if (c == "c3") {
        require(o.p > 0 && o.m > 0 && o.t > 0 && o.n > 0,
                "decode c3: --p, --m, --t and --n are required");
        return c3_decode(g, c3_build(o.p, o.m, o.t, o.n));
    }
    if (c == "c4") {
        const auto spec = c4_find_params(BinaryCodeSpec::hamming(o.hamming_r));
        if (!spec) throw BuildFailure("decode c4: no feasible shortening of the binary code");
        return c4_decode(g, *spec);
    }
    if (c == "c5") {
        require(o.n > 0 && o.k > 0 && o.d > 0, "decode c5: --n, --k and --d are required");
        const auto cb = c5_greedy(o.n, o.k, o.d);
        if (!cb) throw BuildFailure("decode c5: greedy search failed for these parameters");
        return nearest_bounded(g, *cb);
    }
    if (c == "c6") {
        require(o.n > 0 && o.d > 0 && o.k > 0, "decode c6: --n, --d and --k are required");
        return c6_decode(g, SpreadCodeSpec(o.n, o.d, o.k));
    }
    if (c == "c7") {
        require(o.n > 0 && o.d > 0, "decode c7: --n and --d are required");
        return c7_decode(g, ConcatCodeSpec(o.n, o.d));
    }
    throw UsageError("unknown construction: '" + c + "'");
}

// ---- verify ---------------------------------------------------------------

oracle::Decoder make_file_decoder(const Codebook& cb) {
    const std::string& c = cb.construction;
    if (c == "c1") {
        const RhoCodeSpec spec(cb.k, 2, find_param(cb, "m"));
        return [spec](const Permutation& g) { return c1_decode(g, spec); };
    }
    if (c == "c2") {
        const GW2CodeSpec spec(cb.k);
        return [spec](const Permutation& g) { return c2_decode(g, spec); };
    }
    if (c == "c3") {
        auto spec = std::make_shared<BchLatticeCodeSpec>(
            c3_build(find_param(cb, "p"), find_param(cb, "m"), find_param(cb, "t"), cb.n - 1));
        if (spec->k + 1 != cb.k) throw UsageError("verify c3: header k disagrees with the rebuilt code");
        return [spec](const Permutation& g) { return c3_decode(g, *spec); };
    }
    if (c == "c4") {
        const auto spec = c4_find_params(BinaryCodeSpec::hamming(find_param(cb, "hamming_r")));
        if (!spec || spec->n != cb.n || spec->k != cb.k ||
            spec->binary.shorten_count != find_param(cb, "shorten"))
            throw UsageError("verify c4: header disagrees with the rebuilt code");
        const GrayEmbedSpec s = *spec;
        return [s](const Permutation& g) { return c4_decode(g, s); };
    }
    if (c == "c6") {
        const SpreadCodeSpec spec(cb.n, cb.d_claimed, cb.k);
        return [spec](const Permutation& g) { return c6_decode(g, spec); };
    }
    if (c == "c7") {
        const ConcatCodeSpec spec(find_param(cb, "inner_n"), cb.d_claimed);
        if (spec.total_length() != cb.n || spec.k != cb.k)
            throw UsageError("verify c7: header disagrees with the rebuilt code");
        return [spec](const Permutation& g) { return c7_decode(g, spec); };
    }
    // rho, c5 and anything else: bounded nearest-codeword against the file.
    return [&cb](const Permutation& g) { return nearest_bounded(g, cb); };
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Codebook cb = read_codebook_file(o.in_path);
    for (const auto& [key, value] : cb.params)
        if (key == "materialized" && value == "0")
            throw UsageError("verify: file records an unmaterialized construction; nothing to check");

    out << "codebook construction=" << cb.construction << " metric=" << to_string(cb.metric)
        << " n=" << cb.n << " k=" << cb.k << " d=" << cb.d_claimed
        << " codewords=" << cb.codewords.size() << '\n';

    std::vector<std::string> checks;
    {
        std::stringstream ss(o.checks);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item != "distance" && item != "systematic" && item != "decode")
                throw UsageError("verify: unknown check '" + item + "'");
            checks.push_back(item);
        }
        require(!checks.empty(), "verify: empty check list");
    }

    bool all_ok = true;
    for (const std::string& check : checks) {
        if (check == "distance") {
            const int measured = oracle::min_distance(cb, o.workers);
            const bool ok = measured >= cb.d_claimed;
            all_ok = all_ok && ok;
            out << "check=distance measured=" << measured << " claimed=" << cb.d_claimed
                << " ok=" << (ok ? 1 : 0) << '\n';
        } else if (check == "systematic") {
            const bool ok = oracle::check_systematic(cb);
            all_ok = all_ok && ok;
            out << "check=systematic ok=" << (ok ? 1 : 0) << '\n';
        } else {
            const oracle::Decoder decoder = make_file_decoder(cb);
            const int radius = (cb.d_claimed - 1) / 2;
            const auto rep = oracle::exhaustive_decode_test(cb, decoder, radius, o.sample);
            const bool ok = rep.passed();
            all_ok = all_ok && ok;
            out << "check=decode radius=" << radius << " trials=" << rep.trials
                << " failures=" << rep.failures.size() << " ok=" << (ok ? 1 : 0) << '\n';
        }
    }
    out << "verdict=" << (all_ok ? "PASS" : "FAIL") << '\n';
    return all_ok ? 0 : 1;
}

// ---- bounds ---------------------------------------------------------------

int cmd_bounds(const Options& o, std::ostream& out) {
    require(o.n > 0, "bounds: --n is required");
    if (o.ball) {
        out << "exact=" << ball_size_exact(o.n, o.radius) << "\tupper="
            << ball_size_upper(o.n, o.radius) << '\n';
        return 0;
    }
    require(o.d > 0, "bounds: --d is required");
    if (o.maxk) {
        out << "maxk=" << max_k_counting_bound(o.n, o.d) << '\n';
        return 0;
    }
    const long long diameter = static_cast<long long>(o.n) * (o.n - 1) / 2;
    const long long r = std::min<long long>((o.d - 1) / 2, diameter);
    if (o.k > 0) {
        const BoundReport rep = counting_bound_check(o.n, o.k, o.d);
        out << "# n\td\tr\tball_exact\tball_upper\tpacking_bound\tk\tgv_lhs\tgv_rhs\tgv_ok\n";
        out << rep.n << '\t' << rep.d << '\t' << rep.r << '\t' << rep.ball_exact << '\t'
            << rep.ball_upper << '\t' << rep.packing_bound << '\t' << rep.k << '\t' << rep.gv_lhs
            << '\t' << rep.gv_rhs << '\t' << (rep.gv_satisfied ? 1 : 0) << '\n';
        return 0;
    }
    out << "# n\td\tr\tball_exact\tball_upper\tpacking_bound\n";
    out << o.n << '\t' << o.d << '\t' << r << '\t' << ball_size_exact(o.n, r) << '\t'
        << ball_size_upper(o.n, r) << '\t' << packing_bound(o.n, o.d) << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"systematic permutation codes in the Kendall and max-norm metrics"};
    app.require_subcommand(1);
    Options o;

    auto add_code_options = [&](CLI::App* sub) {
        sub->add_option("--construction", o.construction, "code family: c1 c2 rho c3 c4 c5 c6 c7")
            ->required();
        sub->add_option("--k", o.k, "information symbols");
        sub->add_option("--r", o.r, "redundancy symbols (rho)");
        sub->add_option("--m", o.m, "modulus (c1/rho) or extension degree (c3)")
            ->each([&](const std::string&) { o.have_m = true; });
        sub->add_option("--p", o.p, "prime base field (c3)");
        sub->add_option("--t", o.t, "designed digit-error budget (c3)");
        sub->add_option("--n", o.n, "code or inner length (c3/c5/c6/c7)");
        sub->add_option("--d", o.d, "designed minimum distance (c5/c6/c7)");
        sub->add_option("--hamming-r", o.hamming_r, "binary Hamming redundancy (c4), default 4");
    };

    CLI::App* build = app.add_subcommand("build", "materialize a codebook file");
    add_code_options(build);
    build->add_option("--out", o.out_path, "output file path")->required();

    CLI::App* encode = app.add_subcommand("encode", "encode an information permutation");
    add_code_options(encode);
    encode->add_option("--info", o.info, "information permutation, e.g. \"4 1 3 2\"")->required();

    CLI::App* decode = app.add_subcommand("decode", "decode a received permutation");
    add_code_options(decode);
    decode->add_option("--received", o.received, "received permutation")->required();

    CLI::App* verify = app.add_subcommand("verify", "check a codebook file");
    verify->add_option("--in", o.in_path, "codebook file path")->required();
    verify->add_option("--checks", o.checks, "comma list: distance,systematic,decode");
    verify->add_option("--workers", o.workers, "threads for the distance scan");
    verify->add_option("--sample", o.sample, "decode-test codeword sample size (0 = all)");

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate size bounds");
    bounds->add_option("--n", o.n, "permutation length")->required();
    bounds->add_option("--d", o.d, "minimum distance");
    bounds->add_option("--k", o.k, "information symbols");
    bounds->add_option("--r", o.radius, "ball radius (with --ball)");
    bounds->add_flag("--ball", o.ball, "print exact and upper ball sizes for --r");
    bounds->add_flag("--maxk", o.maxk, "print the largest k passing the counting bound");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (build->parsed()) {
            Codebook cb = build_codebook(o);
            write_codebook_file(cb, o.out_path);
            out << "wrote " << o.out_path << ": construction=" << cb.construction << " n=" << cb.n
                << " k=" << cb.k << " d=" << cb.d_claimed << " codewords=" << cb.codewords.size()
                << '\n';
            return 0;
        }
        if (encode->parsed()) {
            const Permutation info = parse_perm_arg(o.info, "--info");
            out << encode_word(o, info).to_line_string() << '\n';
            return 0;
        }
        if (decode->parsed()) {
            const Permutation g = parse_perm_arg(o.received, "--received");
            const std::optional<Permutation> info = decode_word(o, g);
            if (!info) {
                err << "uncorrectable received word\n";
                return 3;
            }
            out << info->to_line_string() << '\n';
            return 0;
        }
        if (verify->parsed()) return cmd_verify(o, out);
        if (bounds->parsed()) return cmd_bounds(o, out);
        err << "no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const BuildFailure& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const Uncorrectable& e) {
        err << e.what() << '\n';
        return 3;
    } catch (const CodebookFileError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
    }
}

}  // namespace rmcodes
