#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floorplan/access_graph.hpp"
#include "floorplan/grid.hpp"

namespace floorplan {

// Per-class intersection and union pixel counts; the associative merge unit
// for corpus evaluation.
struct ClassTally {
    std::uint64_t intersection = 0;
    std::uint64_t unions = 0;
};

using TallyMap = std::map<int, ClassTally>;  // label -> counts

struct IoUReport {
    // Class IoU by label; nullopt when the class is absent from both grids.
    std::map<int, std::optional<double>> per_class;
    TallyMap counts;

    // Means over the defined per-class IoUs of each class subset; nullopt
    // when the subset has no defined class.
    std::optional<double> wo_background;
    std::optional<double> all;
    std::optional<double> structure_only;
    std::optional<double> background_only;
    std::optional<double> wo_structure;
};

namespace eval {

// Per-class intersection/union pixel counts over one grid pair for the
// labels listed in the vocabulary's grid_labels.
TallyMap tally(const Grid& pred, const Grid& truth, const LabelVocabulary& vocab);

void merge_tallies(TallyMap& into, const TallyMap& from);

// |pred==l & truth==l| / |pred==l | truth==l|; nullopt when the union is empty.
std::optional<double> class_iou(const Grid& pred, const Grid& truth, int label);

IoUReport report_from_tallies(const TallyMap& tallies, const LabelVocabulary& vocab);

IoUReport evaluate(const Grid& pred, const Grid& truth, const LabelVocabulary& vocab);

// Micro-average: per-class tallies are summed over the corpus before
// dividing. With macro = true, variant values are instead averaged over the
// per-pair reports (pairs where a variant is undefined are skipped).
IoUReport evaluate_corpus(const std::vector<std::pair<Grid, Grid>>& pairs,
                          const LabelVocabulary& vocab, bool macro = false);

// Aligned text table mirroring the report column order: w/o background,
// all, structure only, background only, w/o structure.
std::string format_table(const std::vector<std::pair<std::string, IoUReport>>& rows);

std::string report_to_json(const IoUReport& report, const LabelVocabulary& vocab);

}  // namespace eval

namespace serial {

// Single-threaded tally with identical counts; kept for tests and the
// kernel benchmark.
TallyMap tally(const Grid& pred, const Grid& truth, const LabelVocabulary& vocab);

}  // namespace serial

}  // namespace floorplan
