#include "wisopt/report_io.hpp"

namespace wisopt {

namespace {

using nlohmann::json;

json support_1based(const GroundPoint& p) {
  json out = json::array();
  for (int j : p.support()) out.push_back(j + 1);
  return out;
}

json stats_to_json(const OracleStats& stats) {
  return json{{"linear_queries", stats.linear_queries},
              {"comparison_queries", stats.comparison_queries},
              {"membership_queries", stats.membership_queries}};
}

const char* claim_name(ImageClaim claim) {
  switch (claim) {
    case ImageClaim::kPresent: return "present";
    case ImageClaim::kAbsent: return "absent";
    default: return "undecided";
  }
}

}  // namespace

json gap_data_to_json(const GapData& data) {
  return json{{"tuple", data.tuple.entries()},
              {"bound", data.bound},
              {"frobenius", data.frobenius},
              {"gap_count", data.gaps.count()},
              {"gaps", data.gap_values()},
              {"schur_bound", schur_bound(data.tuple)}};
}

json report_to_json(const SolveReport& report) {
  json doc;
  doc["solution"] = report.solution.to_string();
  doc["support"] = support_1based(report.solution);
  doc["weight"] = report.weight;
  if (report.guarantee) {
    doc["guarantee"] = *report.guarantee;
  } else {
    doc["guarantee"] = nullptr;
  }
  doc["stats"] = stats_to_json(report.stats);

  json blocks = json::array();
  for (const auto& diag : report.per_block) {
    blocks.push_back(json{{"mu", diag.mu},
                          {"maximizer", diag.maximizer.to_string()},
                          {"minimizer", diag.minimizer.to_string()},
                          {"comparisons", diag.comparisons}});
  }
  doc["blocks"] = std::move(blocks);

  if (!report.chain.empty()) {
    json chain = json::array();
    for (const auto& p : report.chain) chain.push_back(p.to_string());
    doc["chain"] = std::move(chain);
  }
  return doc;
}

json certificate_to_json(const RankCertificate& certificate) {
  json doc;
  doc["instance"] = certificate.instance;
  doc["value"] = certificate.value;
  doc["better_values"] = certificate.better_values;
  doc["rank"] = certificate.rank;
  if (certificate.guarantee) {
    doc["guarantee"] = *certificate.guarantee;
  } else {
    doc["guarantee"] = nullptr;
  }
  doc["within_guarantee"] = certificate.within_guarantee;
  return doc;
}

json transcript_to_json(const AdversaryTranscript& transcript, bool include_queries) {
  json doc;
  doc["family"] = transcript.family;
  doc["m"] = transcript.m;
  doc["query_count"] = transcript.query_count;
  doc["threshold"] = transcript.threshold;
  doc["distinguishing_value"] = transcript.distinguishing_value;
  doc["candidate_count"] = transcript.candidate_count;
  doc["surviving_y"] = transcript.surviving_y;
  doc["claim"] = claim_name(transcript.claim);
  doc["fooled"] = transcript.fooled;

  if (include_queries) {
    json queries = json::array();
    for (const auto& record : transcript.linear_queries) {
      queries.push_back(json{{"vector", record.vector},
                             {"answer", record.answer.to_string()},
                             {"max_value", record.max_value}});
    }
    for (const auto& record : transcript.membership_queries) {
      queries.push_back(json{{"point", record.point.to_string()}, {"answer", record.answer}});
    }
    doc["queries"] = std::move(queries);
  }
  return doc;
}

}  // namespace wisopt
