#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "prsim/vec.hpp"

namespace prsim {

/// One sampled row of a trace. These are the fields serialized to CSV.
/// For the PageRank schemes err_* measure y (or the raw state, where that is
/// the converging quantity) against the reference x_star; for consensus they
/// measure disagreement.
struct TraceSample {
  std::uint64_t k = 0;
  double err_l1 = 0.0;
  double err_linf = 0.0;
  double sum = 0.0;
  std::optional<double> ms_bound;  // mean-square bound, averaged schemes only

  bool operator==(const TraceSample&) const = default;
};

struct TraceMeta {
  std::string scheme;
  std::size_t n = 0;
  double m = 0.15;
  double mhat = 0.0;
  double alpha = 1.0;
  std::optional<double> delta;
  std::optional<std::uint64_t> ns;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::uint64_t steps = 0;
  std::uint64_t sample_every = 1;
};

/// Sampled trajectory of one simulation run plus bookkeeping that tests use
/// directly (sampled state snapshots, squared errors, termination times).
struct SimTrace {
  TraceMeta meta;
  std::vector<TraceSample> samples;

  // In-memory companions to `samples`, not serialized.
  std::vector<double> sq_errors;        // ||y(k) - x*||^2 at sampled k
  std::vector<RankVector> x_samples;
  std::vector<RankVector> y_samples;

  std::optional<std::vector<std::int64_t>> term_times;  // -1 = never froze
  RankVector final_x;
  RankVector final_y;
  std::uint64_t steps_run = 0;
  bool reached_tol = false;         // async / consensus stopping flag
  std::uint64_t range_violations = 0;  // consensus range-contraction breaches
};

/// CSV with header k,err_l1,err_linf,sum_y[,ms_bound]. The ms_bound column
/// appears only when the trace carries the bound. Values are printed with
/// enough digits to round-trip exactly.
void write_trace_csv(std::ostream& out, const SimTrace& trace);
std::vector<TraceSample> read_trace_csv(std::istream& in);

/// Companion CSV with header page,term_k (term_k = -1 if the page never froze).
void write_term_times_csv(std::ostream& out, const std::vector<std::int64_t>& term_times);
std::vector<std::int64_t> read_term_times_csv(std::istream& in);

/// JSON object mirroring the CSV content plus the meta block.
void write_trace_json(std::ostream& out, const SimTrace& trace);

}  // namespace prsim
