#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "algser/series.hpp"

namespace algser {

struct CorpusResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Expected-value resolver: either a SeriesJson literal or an oracle
// directive {"oracle": name, ...params} naming one of the built-in
// independent evaluators.
TruncSeries expected_series(const nlohmann::json& spec, const VarSet& vars, int order);

// Runs every entry of a corpus (a JSON array of entries), printing one
// pass/fail line per entry.
std::vector<CorpusResult> run_corpus(const nlohmann::json& entries, std::ostream& log);

// The built-in regression corpus: the paper's worked examples as data.
nlohmann::json builtin_corpus();

}  // namespace algser
