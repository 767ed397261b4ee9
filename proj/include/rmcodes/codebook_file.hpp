#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rmcodes/codebook.hpp"

namespace rmcodes {

struct CodebookFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Plain-text codebook format:
///
///   # rmcodes codebook v1
///   # metric=kendall
///   # construction=c1
///   # n=6
///   # k=4
///   # d=3
///   # m=5            (construction-specific keys, in a fixed order)
///   # order=lex
///   1 2 3 5 6 4      (one codeword per line, ordered by information rank)
///   ...
///
/// Writing the same codebook twice produces identical bytes.
void write_codebook_file(const Codebook& cb, std::ostream& os);
void write_codebook_file(const Codebook& cb, const std::string& path);

/// Parses and structurally validates a codebook file. Codeword count and
/// distance claims are deliberately not checked here; that is verification's
/// job. Throws CodebookFileError on malformed input.
Codebook read_codebook_file(std::istream& is);
Codebook read_codebook_file(const std::string& path);

}  // namespace rmcodes
