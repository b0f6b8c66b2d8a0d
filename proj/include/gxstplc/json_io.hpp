#pragma once

#include <string>

#include <json.hpp>

#include "gxstplc/pipeline.hpp"

// JSON views of the library types. Servers, message sets, and virtual servers
// are 1-indexed here; rationals are "p/q" strings ("p" when integral).
namespace gxstplc::json_io {

using nlohmann::json;

// {"servers": N, "message_sets": [{"servers": [...], "count": K_m}, ...]}.
// "count" defaults to 1. Throws InvalidPattern on malformed input.
pattern::StoragePattern pattern_from_json(const json& j);
pattern::StoragePattern load_pattern(const std::string& path);
json to_json(const pattern::StoragePattern& p);

json to_json(const capacity::CapacityResult& r);
json to_json(const augment::AugmentedSystem& a);
json to_json(const audit::AuditReport& r);
json to_json(const scheme::Transcript& t, const exactlp::ExactRational& rate);
json to_json(const pipeline::DemoReport& r);
json to_json(const pipeline::LemmaReport& r);

} // namespace gxstplc::json_io
