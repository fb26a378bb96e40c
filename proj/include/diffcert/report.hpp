#ifndef DIFFCERT_REPORT_HPP
#define DIFFCERT_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "diffcert/diffalg.hpp"

namespace diffcert {

// A single front-end request, already validated and parsed.
struct Query {
    std::string command;  // summable | telescope | product-form | depend-add |
                          // depend-mult | galois | difftrans-add | difftrans-mult |
                          // ogawara | iterate
    DifferenceOperator op = DifferenceOperator::shift();
    std::vector<std::string> expressions;  // source text, one per input
    long max_order = 5;                    // telescope
    bool additive = false;                 // galois: additive rank-one / unipotent
    long jordan = 0;                       // galois: jordan block size (0 = off)
    long iterations = 1;                   // iterate
};

// Structured verdict document plus a one-line human summary. The JSON text
// is deterministic: identical queries produce identical bytes.
struct Report {
    std::string verdict;  // canonical tag, also the corpus comparison key
    std::string json;     // full document
    std::string summary;  // one line
    bool verified = false;
};

Report run_query(const Query& query);

// Parses "shift", "q", "q=<rational>", "q=symbolic".
DifferenceOperator parse_operator_spec(const std::string& kind, const std::string& qvalue);

struct CorpusOutcome {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int errors = 0;  // malformed lines
    std::string first_divergence;
};

// Line format (tab separated): command, operator spec, expressions joined
// by ';', expected verdict tag. '#' starts a comment. Cases run
// independently (optionally on `jobs` threads); output order follows input
// order.
CorpusOutcome run_corpus(const std::string& path, long jobs, std::ostream& log);

}  // namespace diffcert

#endif
