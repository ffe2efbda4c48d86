// Figure and table reproduction, defect statistics for random codes, and the
// plain-text diagram renderer backing the CLI.
#pragma once

#include <map>
#include <string>

#include "syzkit/distinguisher.hpp"

namespace syzkit::experiments {

using codes::LinearCode;
using syzygy::BettiDiagram;

// Two-row diagram in the usual layout: header column indices, rows 0/1/2,
// dashes for zeros.
std::string render_diagram(const BettiDiagram& d);

// Strand table for shortened families: one row per s, dashes for zeros.
std::string render_strand_rows(const std::vector<std::vector<size_t>>& rows,
                               size_t s_first);

struct DefectStatsRow {
  uint32_t r = 0;
  double mean = 0;
  int64_t lo = 0, hi = 0;  // central 99% interval (attained values)
};

struct DefectStatsTable {
  size_t n = 0, k = 0;
  uint64_t q = 0;
  size_t d = 0, d_dual = 0;
  size_t samples = 0;
  std::vector<DefectStatsRow> rows;
};

// Samples conditioned random codes and tabulates def(phi_r) for
// r in [r_lo, r_hi]: mean plus the central 99% interval (at most 0.5% of the
// mass dropped per tail, by rank).
DefectStatsTable defect_stats(size_t n, size_t k, uint64_t q, size_t d,
                              size_t d_dual, size_t samples, uint32_t r_lo,
                              uint32_t r_hi, Rng& rng,
                              const syzygy::StrandOptions& opt = {});

struct FigureResult {
  std::string id;
  std::string text;  // rendered diagram / table
  std::string json;  // structured payload
};

// Envelope for reproducible runs: the payload is a deterministic function of
// the command and seed; wall time and predicted peak shape are informational.
struct ExperimentRecord {
  std::string command;
  uint64_t seed = 0;
  double wall_time_s = 0;
  size_t peak_rows = 0, peak_cols = 0;  // largest matrix the run planned
  std::string payload;                  // the command's JSON output
};

std::string record_to_json(const ExperimentRecord& rec);

// Known ids: fig-hamming, fig-golay3, fig-golay2, fig-parity9, fig-grs15,
// fig-pi, tab-alt-2-10-5, tab-goppa-4-4-4, tab-mceliece,
// tab-statdef-cell-d<d>-dp<ddual>. Throws std::invalid_argument on unknown
// ids. Heavy reproductions honor the strand options' memory cap.
FigureResult reproduce(const std::string& figure_id, uint64_t seed,
                       const syzygy::StrandOptions& opt = {});

std::vector<std::string> known_figures();

}  // namespace syzkit::experiments
