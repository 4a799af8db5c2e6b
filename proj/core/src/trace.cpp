#include "prsim/trace.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "json.hpp"
#include "prsim/errors.hpp"

namespace prsim {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& field, std::size_t lineno) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0')
    throw ParseError("bad number '" + field + "'", lineno);
  return v;
}

std::uint64_t parse_u64(const std::string& field, std::size_t lineno) {
  char* end = nullptr;
  const unsigned long long v = std::strtoull(field.c_str(), &end, 10);
  if (end == field.c_str() || *end != '\0')
    throw ParseError("bad integer '" + field + "'", lineno);
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

void write_trace_csv(std::ostream& out, const SimTrace& trace) {
  const bool with_bound =
      !trace.samples.empty() && trace.samples.front().ms_bound.has_value();
  out << (with_bound ? "k,err_l1,err_linf,sum_y,ms_bound\n" : "k,err_l1,err_linf,sum_y\n");
  for (const TraceSample& s : trace.samples) {
    out << s.k << ',' << fmt_double(s.err_l1) << ',' << fmt_double(s.err_linf) << ','
        << fmt_double(s.sum);
    if (with_bound) out << ',' << fmt_double(s.ms_bound.value());
    out << '\n';
  }
}

std::vector<TraceSample> read_trace_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError("empty trace file", 1);
  ++lineno;
  bool with_bound = false;
  if (line == "k,err_l1,err_linf,sum_y,ms_bound")
    with_bound = true;
  else if (line != "k,err_l1,err_linf,sum_y")
    throw ParseError("unrecognized trace header '" + line + "'", lineno);

  std::vector<TraceSample> samples;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != (with_bound ? 5u : 4u))
      throw ParseError("expected " + std::to_string(with_bound ? 5 : 4) + " fields", lineno);
    TraceSample s;
    s.k = parse_u64(fields[0], lineno);
    s.err_l1 = parse_double(fields[1], lineno);
    s.err_linf = parse_double(fields[2], lineno);
    s.sum = parse_double(fields[3], lineno);
    if (with_bound) s.ms_bound = parse_double(fields[4], lineno);
    samples.push_back(s);
  }
  return samples;
}

void write_term_times_csv(std::ostream& out, const std::vector<std::int64_t>& term_times) {
  out << "page,term_k\n";
  for (std::size_t i = 0; i < term_times.size(); ++i)
    out << i << ',' << term_times[i] << '\n';
}

std::vector<std::int64_t> read_term_times_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line) || line != "page,term_k")
    throw ParseError("expected header 'page,term_k'", 1);
  ++lineno;
  std::vector<std::int64_t> times;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 2) throw ParseError("expected 'page,term_k'", lineno);
    const auto page = static_cast<std::size_t>(parse_u64(fields[0], lineno));
    if (page != times.size()) throw ParseError("pages must be consecutive from 0", lineno);
    char* end = nullptr;
    const long long tk = std::strtoll(fields[1].c_str(), &end, 10);
    if (end == fields[1].c_str() || *end != '\0')
      throw ParseError("bad integer '" + fields[1] + "'", lineno);
    times.push_back(tk);
  }
  return times;
}

void write_trace_json(std::ostream& out, const SimTrace& trace) {
  nlohmann::json meta{
      {"scheme", trace.meta.scheme},   {"n", trace.meta.n},
      {"m", trace.meta.m},             {"mhat", trace.meta.mhat},
      {"alpha", trace.meta.alpha},     {"seed", trace.meta.seed},
      {"stream", trace.meta.stream},   {"steps", trace.meta.steps},
      {"sample_every", trace.meta.sample_every},
  };
  if (trace.meta.delta) meta["delta"] = *trace.meta.delta;
  if (trace.meta.ns) meta["ns"] = *trace.meta.ns;

  nlohmann::json samples = nlohmann::json::array();
  for (const TraceSample& s : trace.samples) {
    nlohmann::json row{
        {"k", s.k}, {"err_l1", s.err_l1}, {"err_linf", s.err_linf}, {"sum_y", s.sum}};
    if (s.ms_bound) row["ms_bound"] = *s.ms_bound;
    samples.push_back(std::move(row));
  }

  nlohmann::json doc{{"meta", std::move(meta)}, {"samples", std::move(samples)}};
  if (trace.term_times) doc["term_times"] = *trace.term_times;
  out << doc.dump(2) << '\n';
}

}  // namespace prsim
