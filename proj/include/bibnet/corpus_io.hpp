#pragma once

#include <istream>
#include <ostream>

#include <json.hpp>

#include "bibnet/normalize.hpp"
#include "bibnet/record.hpp"

namespace bibnet {

nlohmann::ordered_json record_to_json(const BiblioRecord& r);
/// Throws InputError on a missing or mistyped field.
BiblioRecord record_from_json(const nlohmann::json& j);

/// Line-delimited JSON, one record per line, in corpus order.
void write_corpus_jsonl(std::ostream& out, const Corpus& corpus);
Corpus read_corpus_jsonl(std::istream& in,
                         const RuleTables& rules = RuleTables::defaults());

}  // namespace bibnet
