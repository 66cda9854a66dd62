#pragma once

#include <json.hpp>

#include "wisopt/monoid.hpp"
#include "wisopt/solver.hpp"
#include "wisopt/verify.hpp"

namespace wisopt {

// Stable machine-readable schemas for reports, certificates, transcripts and
// gap summaries. Ground points serialize as 0/1 strings (index 1 leftmost),
// index sets as 1-based lists to match the instance format.
nlohmann::json gap_data_to_json(const GapData& data);
nlohmann::json report_to_json(const SolveReport& report);
nlohmann::json certificate_to_json(const RankCertificate& certificate);
nlohmann::json transcript_to_json(const AdversaryTranscript& transcript, bool include_queries);

}  // namespace wisopt
