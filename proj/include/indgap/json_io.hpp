#pragma once

#include <json.hpp>

#include "indgap/hereditary.hpp"
#include "indgap/oracles.hpp"
#include "indgap/partitions.hpp"
#include "indgap/reductions.hpp"

namespace indgap {

nlohmann::json to_json(const VertexSet& s);  // sorted integer array
nlohmann::json to_json(const GapReport& r);
nlohmann::json to_json(const CliquePartition& p);  // array of sorted vertex arrays
nlohmann::json to_json(const TightnessCertificate& c);
nlohmann::json to_json(const GadgetArtifact& a);
nlohmann::json to_json(const GadgetClaimsReport& r);
nlohmann::json to_json(const Theorem3Report& r);
nlohmann::json to_json(const RecognitionResult& r);

}  // namespace indgap
