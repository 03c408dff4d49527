#pragma once

// Report rendering behind the command-line front end. Every command returns its full
// output and exit status; nothing here writes to a stream.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nikulin/integer.hpp"

namespace nikulin {

enum class Format { text, csv, json };

/// Bad flags or arguments; the front end maps it to exit status 2.
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

Format parse_format(const std::string& name);

/// One column of the Pell table. star: 2t = k(k+1); boxed: beta0 odd; primed: the negative
/// equation is solvable and the entry is not already starred (2t = 2 carries only the star).
struct TableRow {
    std::int64_t two_t = 0;
    std::optional<BigInt> alpha0;
    std::optional<BigInt> beta0;
    bool star = false;
    bool boxed = false;
    bool primed = false;

    /// "2*", "[8]", "10'" or plain "14".
    std::string label() const;
};

/// Rows for 2t = 2, 4, ..., max_2t; throws UsageError unless max_2t is even and >= 2.
std::vector<TableRow> table_rows(std::int64_t max_2t);

struct CommandOutput {
    std::string text;
    int exit_code = 0;
};

CommandOutput cmd_table(std::int64_t max_2t, Format format);
CommandOutput cmd_classify(std::int64_t t, Format format);
/// Exit status 1 if a parity or congruence lemma is violated in the range.
CommandOutput cmd_scan(std::int64_t t_min, std::int64_t t_max, Format format);
CommandOutput cmd_construct(std::int64_t t, Format format);

/// Claim ids accepted by cmd_verify.
const std::vector<std::string>& claim_ids();

/// Exit status 0 on PASS, 1 on FAIL. Unknown claims, a missing t, or a t that contradicts
/// the claim (t4-nefness needs 4, t2-f1-nef needs 2) raise UsageError.
CommandOutput cmd_verify(std::optional<std::int64_t> t, const std::string& claim, std::uint64_t node_cap,
                         Format format);

/// "A..B" with 1 <= A <= B.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text);

}  // namespace nikulin
