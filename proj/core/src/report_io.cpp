#include "kplab/report_io.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace kplab {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

Json point_json(const SweepPoint& pt) {
  Json j;
  j["n"] = pt.p.n;
  j["m"] = pt.p.m;
  j["a"] = pt.p.a;
  j["b"] = pt.p.b;
  j["outcome"] = outcome_name(pt.outcome);
  j["value"] = pt.value;
  j["detail"] = pt.detail;
  return j;
}

Json timings_json(const std::vector<EngineTiming>& timings) {
  Json j = Json::array();
  for (const EngineTiming& t : timings) {
    j.push_back({{"engine", t.engine}, {"seconds", t.seconds}});
  }
  return j;
}

Json proof_json(const sym::ProofReport& r) {
  Json j;
  j["mode"] = r.mode;
  j["status"] = sym::to_string(r.status);
  j["rewrite_steps"] = r.rewrite_steps;
  j["identity_degree_lhs"] = r.degree_lhs;
  j["identity_degree_rhs"] = r.degree_rhs;
  if (r.witness) {
    j["witness"] = {{"n", (*r.witness)[0]},
                    {"m", (*r.witness)[1]},
                    {"a", (*r.witness)[2]},
                    {"b", (*r.witness)[3]}};
  }
  j["detail"] = r.detail;
  return j;
}

}  // namespace

std::optional<OutputFormat> format_from_name(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return std::nullopt;
}

std::string render(const SweepReport& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json j;
    j["schema_version"] = report.schema_version;
    j["command"] = report.command;
    j["n_max"] = report.n_max;
    j["counts"] = {{"pass", report.passes},
                   {"fail", report.failures},
                   {"out_of_domain", report.out_of_domain},
                   {"total", static_cast<long>(report.points.size())}};
    Json pts = Json::array();
    for (const SweepPoint& pt : report.points) {
      pts.push_back(point_json(pt));
    }
    j["points"] = std::move(pts);
    j["timings"] = timings_json(report.timings);
    return j.dump(2) + "\n";
  }

  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "n,m,a,b,outcome,value,detail\n";
    for (const SweepPoint& pt : report.points) {
      out << pt.p.n << ',' << pt.p.m << ',' << pt.p.a << ',' << pt.p.b << ','
          << outcome_name(pt.outcome) << ',' << csv_escape(pt.value) << ','
          << csv_escape(pt.detail) << '\n';
    }
    return out.str();
  }

  std::ostringstream out;
  out << "command: " << report.command << " (schema " << report.schema_version
      << ")\n";
  out << "n-max: " << report.n_max << '\n';
  out << "points: " << report.points.size() << "  pass: " << report.passes
      << "  fail: " << report.failures
      << "  out-of-domain: " << report.out_of_domain << '\n';
  // verify-main's points are few and their values are the headline output.
  if (report.command == "verify-main") {
    for (const SweepPoint& pt : report.points) {
      out << "  n=" << pt.p.n << "  det=" << pt.value << "  "
          << outcome_name(pt.outcome)
          << (pt.detail.empty() ? "" : "  " + pt.detail) << '\n';
    }
  } else {
    for (const SweepPoint& pt : report.points) {
      if (pt.outcome == PointOutcome::fail) {
        out << "  FAIL (n=" << pt.p.n << ", m=" << pt.p.m << ", a=" << pt.p.a
            << ", b=" << pt.p.b << "): " << pt.detail << '\n';
      }
    }
  }
  out << "timings:";
  for (const EngineTiming& t : report.timings) {
    out << "  " << t.engine << '=' << std::fixed << std::setprecision(3)
        << t.seconds << 's';
  }
  out << '\n';
  out << (report.all_passed() ? "result: PASS" : "result: FAIL") << '\n';
  return out.str();
}

std::string render(const std::vector<BenchRecord>& records, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "bench";
    Json recs = Json::array();
    for (const BenchRecord& r : records) {
      recs.push_back({{"engine", r.engine},
                      {"order", r.order},
                      {"seconds", r.seconds},
                      {"peak_bits", r.peak_bits},
                      {"value", r.value},
                      {"refused", r.refused}});
    }
    j["records"] = std::move(recs);
    return j.dump(2) + "\n";
  }

  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "engine,order,seconds,peak_bits,value,refused\n";
    for (const BenchRecord& r : records) {
      out << r.engine << ',' << r.order << ',' << r.seconds << ',' << r.peak_bits
          << ',' << csv_escape(r.value) << ',' << (r.refused ? "true" : "false")
          << '\n';
    }
    return out.str();
  }

  std::ostringstream out;
  out << std::left << std::setw(10) << "engine" << std::setw(7) << "order"
      << std::setw(14) << "seconds" << std::setw(11) << "peak-bits"
      << "value\n";
  for (const BenchRecord& r : records) {
    out << std::left << std::setw(10) << r.engine << std::setw(7) << r.order;
    if (r.refused) {
      out << "refused (order guard)\n";
      continue;
    }
    out << std::setw(14) << std::setprecision(6) << std::fixed << r.seconds
        << std::setw(11) << r.peak_bits << r.value << '\n';
  }
  return out.str();
}

std::string render(const std::vector<sym::ProofReport>& reports,
                   OutputFormat format) {
  if (format == OutputFormat::json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "prove";
    Json reps = Json::array();
    for (const sym::ProofReport& r : reports) {
      reps.push_back(proof_json(r));
    }
    j["reports"] = std::move(reps);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) {
      out << '\n';
    }
    out << reports[i].to_text();
  }
  return out.str();
}

std::string render(const DetOutput& out, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "det";
    j["engine"] = out.engine;
    j["value"] = out.value;
    if (out.fallback_used) {
      j["fallback_used"] = *out.fallback_used;
    }
    return j.dump(2) + "\n";
  }
  std::string text = out.value + "\n";
  if (out.fallback_used) {
    text += std::string("fallback_used: ") + (*out.fallback_used ? "true" : "false") +
            "\n";
  }
  return text;
}

}  // namespace kplab
