#include "parabound/results_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace parabound::io {

namespace {

void append_real(std::string& out, double v) {
  if (std::isnan(v)) { out += "\"nan\""; return; }
  if (std::isinf(v)) { out += v > 0 ? "\"inf\"" : "\"-inf\""; return; }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void append_string(std::string& out, const std::string& s) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += ch;
    }
  }
  out += '"';
}

double real_of(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    if (s == "nan") return std::nan("");
    throw std::invalid_argument("results: bad real literal '" + s + "'");
  }
  return j.get<double>();
}

}  // namespace

std::string emit_results(const ResultsDocument& doc) {
  std::string out = "{";
  out += "\"problem\":";
  append_string(out, doc.problem);
  out += ",\"method\":";
  append_string(out, doc.method);
  out += ",\"side\":";
  append_string(out, doc.side);
  out += ",\"N\":" + std::to_string(doc.n_splits);
  out += ",\"segments\":[";
  for (size_t i = 0; i < doc.segments.size(); ++i) {
    const BoundSegment& s = doc.segments[i];
    if (i) out += ',';
    out += "{\"lo\":";
    append_real(out, s.lo);
    out += ",\"hi\":";
    append_real(out, s.hi);
    out += ",\"coeffs\":[";
    append_real(out, s.c0);
    out += ',';
    append_real(out, s.c1);
    out += ',';
    append_real(out, s.c2);
    out += "],\"available\":";
    out += s.available ? "true" : "false";
    out += '}';
  }
  out += "],\"samples\":[";
  for (size_t i = 0; i < doc.samples.size(); ++i) {
    if (i) out += ',';
    out += "{\"lambda\":";
    append_real(out, doc.samples[i].first);
    out += ",\"f\":";
    append_real(out, doc.samples[i].second);
    out += '}';
  }
  out += "],\"metrics\":{\"availability\":";
  append_real(out, doc.availability);
  out += ",\"rmse\":";
  append_real(out, doc.rmse);
  out += ",\"rel_time\":";
  if (doc.rel_time) append_real(out, *doc.rel_time);
  else out += "null";
  out += '}';
  if (doc.has_iterations) {
    out += ",\"iterations\":[";
    for (size_t i = 0; i < doc.iterations.size(); ++i) {
      const RefineTraceEntry& e = doc.iterations[i];
      if (i) out += ',';
      out += "{\"lo\":";
      append_real(out, e.interval.lo);
      out += ",\"hi\":";
      append_real(out, e.interval.hi);
      out += ",\"priority\":";
      append_real(out, e.priority);
      out += ",\"split\":";
      out += e.split ? "true" : "false";
      out += '}';
    }
    out += ']';
  }
  out += "}\n";
  return out;
}

ResultsDocument parse_results(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ResultsDocument doc;
  doc.problem = j.at("problem").get<std::string>();
  doc.method = j.at("method").get<std::string>();
  doc.side = j.at("side").get<std::string>();
  doc.n_splits = j.at("N").get<int>();
  for (const auto& s : j.at("segments")) {
    BoundSegment seg;
    seg.lo = real_of(s.at("lo"));
    seg.hi = real_of(s.at("hi"));
    const auto& c = s.at("coeffs");
    seg.c0 = real_of(c.at(0));
    seg.c1 = real_of(c.at(1));
    seg.c2 = real_of(c.at(2));
    seg.available = s.at("available").get<bool>();
    doc.segments.push_back(seg);
  }
  for (const auto& s : j.at("samples"))
    doc.samples.emplace_back(real_of(s.at("lambda")), real_of(s.at("f")));
  const auto& m = j.at("metrics");
  doc.availability = real_of(m.at("availability"));
  doc.rmse = real_of(m.at("rmse"));
  if (!m.at("rel_time").is_null()) doc.rel_time = real_of(m.at("rel_time"));
  if (j.contains("iterations")) {
    doc.has_iterations = true;
    for (const auto& e : j.at("iterations")) {
      RefineTraceEntry entry;
      entry.interval = {real_of(e.at("lo")), real_of(e.at("hi"))};
      entry.priority = real_of(e.at("priority"));
      entry.split = e.at("split").get<bool>();
      doc.iterations.push_back(entry);
    }
  }
  return doc;
}

}  // namespace parabound::io
