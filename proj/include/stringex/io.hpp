#pragma once

#include <map>

#include <json.hpp>

#include "stringex/core.hpp"
#include "stringex/exchange.hpp"
#include "stringex/mutation.hpp"
#include "stringex/pprime.hpp"

// JSON forms. Keys are emitted sorted (nlohmann::json's object ordering) and
// vertex lists follow matrix order, so dumps are byte-stable.
//
//   instance     {"cartan": [[..]..], "top": [..], "bottom": [..], "origins": "BBT.."}
//                origins is optional when top is empty (all Bottom).
//   matrix       {"labels": ["1:1", ..], "rows": [[..], ..]}
//   certificate  {"label_map": {..}, "outer_mutations": [..], "steps": [..],
//                 "symmetrizer": [..], "target_labels": [..]}
//   step         {"connection": {"2:1": 3, ..}, "level": 1, "mu": ["1:2", ..],
//                 "skipped": false, "vertex": "1:1"}   (vertex null when skipped)
//
// Mutation sequences are listed in composition order: the last entry is
// applied first.
namespace stringex::io {

using nlohmann::json;

/// Throws Error{MalformedInput} on schema violations, and the core errors for
/// invalid Cartan matrices or letters.
ShuffleWord word_from_json(const json& instance);
json word_to_json(const ShuffleWord& word);

json matrix_to_json(const ExchangeMatrix& m);
ExchangeMatrix matrix_from_json(const json& j);

json seq_to_json(const MutationSeq& s);
MutationSeq seq_from_json(const json& j);

json label_map_to_json(const std::map<ClosedStringId, ClosedStringId>& map);
std::map<ClosedStringId, ClosedStringId> label_map_from_json(const json& j);

json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

}  // namespace stringex::io
