#include "rmcodes/codebook_file.hpp"

#include <fstream>
#include <sstream>

namespace rmcodes {

namespace {

constexpr const char* kMagic = "# rmcodes codebook v1";

}  // namespace

void write_codebook_file(const Codebook& cb, std::ostream& os) {
    os << kMagic << '\n';
    os << "# metric=" << to_string(cb.metric) << '\n';
    os << "# construction=" << cb.construction << '\n';
    os << "# n=" << cb.n << '\n';
    os << "# k=" << cb.k << '\n';
    os << "# d=" << cb.d_claimed << '\n';
    for (const auto& [key, value] : cb.params) os << "# " << key << '=' << value << '\n';
    os << "# order=lex\n";
    for (const Permutation& c : cb.codewords) os << c.to_line_string() << '\n';
}

void write_codebook_file(const Codebook& cb, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw CodebookFileError("cannot open for writing: " + path);
    write_codebook_file(cb, os);
    os.flush();
    if (!os) throw CodebookFileError("write failed: " + path);
}

Codebook read_codebook_file(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kMagic)
        throw CodebookFileError("missing or wrong magic line");

    Codebook cb;
    bool have_metric = false, have_construction = false, have_n = false, have_k = false,
         have_d = false, have_order = false;
    auto parse_int = [](const std::string& s, const std::string& key) {
        try {
            size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw CodebookFileError("bad integer for header key " + key + ": '" + s + "'");
        }
    };

    bool in_header = true;
    while (std::getline(is, line)) {
        if (line.empty()) throw CodebookFileError("blank line in codebook file");
        if (line.rfind("# ", 0) == 0) {
            if (!in_header) throw CodebookFileError("header line after codeword body");
            const std::string kv = line.substr(2);
            const size_t eq = kv.find('=');
            if (eq == std::string::npos || eq == 0)
                throw CodebookFileError("malformed header line: '" + line + "'");
            const std::string key = kv.substr(0, eq);
            const std::string value = kv.substr(eq + 1);
            if (key == "metric") {
                try {
                    cb.metric = metric_from_string(value);
                } catch (const std::exception&) {
                    throw CodebookFileError("unknown metric: '" + value + "'");
                }
                have_metric = true;
            } else if (key == "construction") {
                cb.construction = value;
                have_construction = true;
            } else if (key == "n") {
                cb.n = parse_int(value, key);
                have_n = true;
            } else if (key == "k") {
                cb.k = parse_int(value, key);
                have_k = true;
            } else if (key == "d") {
                cb.d_claimed = parse_int(value, key);
                have_d = true;
            } else if (key == "order") {
                if (value != "lex") throw CodebookFileError("unsupported order: '" + value + "'");
                have_order = true;
            } else {
                cb.params.emplace_back(key, value);
            }
            continue;
        }
        in_header = false;
        Permutation p = [&] {
            try {
                return parse_permutation_line(line);
            } catch (const std::exception& e) {
                throw CodebookFileError(std::string("bad codeword line: ") + e.what());
            }
        }();
        if (!have_n || p.n() != cb.n)
            throw CodebookFileError("codeword length does not match header n");
        cb.codewords.push_back(std::move(p));
    }
    if (!have_metric || !have_construction || !have_n || !have_k || !have_d || !have_order)
        throw CodebookFileError("missing required header keys");
    if (cb.n < 1 || cb.k < 1 || cb.k > cb.n || cb.d_claimed < 1)
        throw CodebookFileError("inconsistent header parameters");
    return cb;
}

Codebook read_codebook_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw CodebookFileError("cannot open for reading: " + path);
    return read_codebook_file(is);
}

}  // namespace rmcodes
