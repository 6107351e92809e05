#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "gammacrit/io.hpp"
#include "gammacrit/report.hpp"
#include "gammacrit/verify.hpp"

namespace gammacrit {

namespace {

using nlohmann::json;

json optional_count(const std::optional<std::size_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json edges_json(const EdgeSet& s) {
  json out = json::array();
  for (const Edge& e : s.edges()) out.push_back({e.u, e.v});
  return out;
}

json report_json(const TheoremReport& r, bool include_timing) {
  json j;
  j["theorem_id"] = r.theorem_id;
  j["statement"] = r.statement;
  j["corpus_description"] = r.corpus_description;
  j["instances_checked"] = r.instances_checked;
  j["verdict"] = std::string(to_string(r.verdict()));
  j["counterexamples"] = json::array();
  for (const auto& c : r.counterexamples) {
    j["counterexamples"].push_back(
        {{"graph6", c.graph6}, {"expected", c.expected}, {"actual", c.actual}});
  }
  j["skipped"] = json::array();
  for (const auto& s : r.skipped) j["skipped"].push_back({{"graph6", s.graph6}, {"reason", s.reason}});
  j["notes"] = r.notes;
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace

std::string to_json(const TheoremReport& r, bool include_timing) {
  return report_json(r, include_timing).dump(2);
}

std::string to_json(const std::vector<TheoremReport>& reports, bool include_timing) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_json(r, include_timing));
  return arr.dump(2);
}

std::string to_json(const FamilyInstance& f) {
  json j;
  j["family_id"] = f.family_id;
  j["params"] = f.params;
  j["graph6"] = encode_graph6(f.graph);
  j["order"] = f.graph.order();
  j["size"] = f.graph.size();
  j["predicted"] = {{"gamma", optional_count(f.predicted.gamma)},
                    {"sd", optional_count(f.predicted.sd)},
                    {"q", optional_count(f.predicted.q)}};
  j["labels"] = f.labels;
  j["tags"] = f.tags;
  return j.dump(2);
}

std::string to_json(const CriticalityReport& r) {
  json j;
  j["gamma"] = r.gamma;
  j["sd"] = optional_count(r.sd);
  j["sd_witness"] = edges_json(r.sd_witness);
  j["q"] = optional_count(r.q);
  j["q_witness_safe"] = edges_json(r.q_witness_safe);
  j["stats"] = {{"strategy", std::string(to_string(r.stats.strategy))},
                {"gamma_evaluations", r.stats.gamma_evaluations},
                {"cache_hits", r.stats.cache_hits},
                {"subsets_examined", r.stats.subsets_examined}};
  return j.dump(2);
}

std::string summary_table(const std::vector<TheoremReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(18) << "theorem" << std::setw(12) << "verdict" << std::right
      << std::setw(10) << "checked" << std::setw(8) << "cex" << std::setw(8) << "skip"
      << std::setw(10) << "seconds" << "\n";
  std::size_t failing = 0;
  for (const auto& r : reports) {
    if (r.verdict() != Verdict::Pass) ++failing;
    out << std::left << std::setw(18) << r.theorem_id << std::setw(12) << to_string(r.verdict())
        << std::right << std::setw(10) << r.instances_checked << std::setw(8)
        << r.counterexamples.size() << std::setw(8) << r.skipped.size() << std::setw(10)
        << std::fixed << std::setprecision(2) << r.elapsed_seconds << "\n";
  }
  out << reports.size() - failing << "/" << reports.size() << " theorems pass\n";
  return out.str();
}

}  // namespace gammacrit
