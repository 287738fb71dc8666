#pragma once

#include <json.hpp>

#include "folia/reducer.hpp"

namespace folia {

using Json = nlohmann::ordered_json;

Json singular_json(const std::vector<SingularRecord>& sing);
Json frame_json(const LinearFrame& m);
LinearFrame frame_from_json(const Json& j);

/// {input, degree, steps: [...], final: {...}} with a fixed key order.
Json transcript_json(const ReductionTranscript& t);

/// Re-applies the frames and maps of a JSON transcript, checking every
/// recorded resultForm; returns the final form.
FoliationForm replay_json(const Json& j);

}  // namespace folia
