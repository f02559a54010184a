#include "floorplan/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace floorplan::eval {

namespace {

void check_dims(const Grid& pred, const Grid& truth) {
    if (pred.width != truth.width || pred.height != truth.height)
        throw std::invalid_argument("grid dimension mismatch: " + std::to_string(pred.width) + "x" +
                                    std::to_string(pred.height) + " vs " +
                                    std::to_string(truth.width) + "x" +
                                    std::to_string(truth.height));
}

std::vector<int> vocab_labels(const LabelVocabulary& vocab) {
    std::vector<int> labels;
    labels.reserve(vocab.grid_labels.size());
    for (const auto& [name, label] : vocab.grid_labels) labels.push_back(label);
    return labels;
}

TallyMap tally_impl(const Grid& pred, const Grid& truth, const LabelVocabulary& vocab,
                    bool parallel) {
    check_dims(pred, truth);
    const std::vector<int> labels = vocab_labels(vocab);
    int max_label = 0;
    for (int l : labels) max_label = std::max(max_label, l);
    const int k = max_label + 1;

    // Flat per-label counters; per-thread copies merged at the end keep the
    // integer sums independent of the thread count.
    std::vector<std::uint64_t> inter(k, 0), uni(k, 0);
    const std::size_t n = pred.cells.size();
#pragma omp parallel if (parallel)
    {
        std::vector<std::uint64_t> linter(k, 0), luni(k, 0);
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            const int p = pred.cells[i];
            const int t = truth.cells[i];
            if (p == t) {
                if (p < k) {
                    ++linter[p];
                    ++luni[p];
                }
            } else {
                if (p < k) ++luni[p];
                if (t < k) ++luni[t];
            }
        }
#pragma omp critical
        for (int l = 0; l < k; ++l) {
            inter[l] += linter[l];
            uni[l] += luni[l];
        }
    }

    TallyMap out;
    for (int l : labels) out[l] = {inter[l], uni[l]};
    return out;
}

std::optional<double> subset_mean(const IoUReport& report, const std::vector<int>& labels) {
    double sum = 0.0;
    int defined = 0;
    for (int l : labels) {
        const auto it = report.per_class.find(l);
        if (it != report.per_class.end() && it->second) {
            sum += *it->second;
            ++defined;
        }
    }
    if (defined == 0) return std::nullopt;
    return sum / defined;
}

}  // namespace

TallyMap tally(const Grid& pred, const Grid& truth, const LabelVocabulary& vocab) {
    return tally_impl(pred, truth, vocab, true);
}

void merge_tallies(TallyMap& into, const TallyMap& from) {
    for (const auto& [label, counts] : from) {
        auto& t = into[label];
        t.intersection += counts.intersection;
        t.unions += counts.unions;
    }
}

std::optional<double> class_iou(const Grid& pred, const Grid& truth, int label) {
    check_dims(pred, truth);
    std::uint64_t inter = 0, uni = 0;
    for (std::size_t i = 0; i < pred.cells.size(); ++i) {
        const bool p = pred.cells[i] == label;
        const bool t = truth.cells[i] == label;
        inter += p && t ? 1 : 0;
        uni += p || t ? 1 : 0;
    }
    if (uni == 0) return std::nullopt;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

IoUReport report_from_tallies(const TallyMap& tallies, const LabelVocabulary& vocab) {
    IoUReport report;
    report.counts = tallies;
    for (const auto& [label, t] : tallies) {
        if (t.unions == 0)
            report.per_class[label] = std::nullopt;
        else
            report.per_class[label] =
                static_cast<double>(t.intersection) / static_cast<double>(t.unions);
    }

    const int bg = vocab.grid_labels.at("background");
    const int st = vocab.grid_labels.at("structure");
    std::vector<int> all_labels, wo_bg, wo_st;
    for (const auto& [name, label] : vocab.grid_labels) {
        all_labels.push_back(label);
        if (label != bg) wo_bg.push_back(label);
        if (label != st) wo_st.push_back(label);
    }
    report.all = subset_mean(report, all_labels);
    report.wo_background = subset_mean(report, wo_bg);
    report.wo_structure = subset_mean(report, wo_st);
    report.structure_only = subset_mean(report, {st});
    report.background_only = subset_mean(report, {bg});
    return report;
}

IoUReport evaluate(const Grid& pred, const Grid& truth, const LabelVocabulary& vocab) {
    return report_from_tallies(tally(pred, truth, vocab), vocab);
}

IoUReport evaluate_corpus(const std::vector<std::pair<Grid, Grid>>& pairs,
                          const LabelVocabulary& vocab, bool macro) {
    if (pairs.empty()) throw std::invalid_argument("evaluate_corpus: empty corpus");

    if (!macro) {
        TallyMap total;
        for (const auto& [pred, truth] : pairs) merge_tallies(total, tally(pred, truth, vocab));
        return report_from_tallies(total, vocab);
    }

    // Macro: average each variant over the pairs where it is defined.
    IoUReport out;
    auto accumulate = [](std::optional<double>& slot, const std::optional<double>& v, int& n) {
        if (!v) return;
        slot = slot.value_or(0.0) + *v;
        ++n;
    };
    int n_all = 0, n_wob = 0, n_so = 0, n_bo = 0, n_wos = 0;
    for (const auto& [pred, truth] : pairs) {
        const IoUReport r = evaluate(pred, truth, vocab);
        merge_tallies(out.counts, r.counts);
        accumulate(out.all, r.all, n_all);
        accumulate(out.wo_background, r.wo_background, n_wob);
        accumulate(out.structure_only, r.structure_only, n_so);
        accumulate(out.background_only, r.background_only, n_bo);
        accumulate(out.wo_structure, r.wo_structure, n_wos);
    }
    auto finish = [](std::optional<double>& slot, int n) {
        if (n > 0) slot = *slot / n;
    };
    finish(out.all, n_all);
    finish(out.wo_background, n_wob);
    finish(out.structure_only, n_so);
    finish(out.background_only, n_bo);
    finish(out.wo_structure, n_wos);
    for (const auto& [label, t] : out.counts)
        out.per_class[label] =
            t.unions == 0 ? std::nullopt
                          : std::optional<double>(static_cast<double>(t.intersection) /
                                                  static_cast<double>(t.unions));
    return out;
}

namespace {

std::string cell(const std::optional<double>& v) {
    if (!v) return "   n/a";
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%6.3f", *v);
    return buf;
}

}  // namespace

std::string format_table(const std::vector<std::pair<std::string, IoUReport>>& rows) {
    std::size_t name_w = 4;
    for (const auto& [name, r] : rows) name_w = std::max(name_w, name.size());
    std::ostringstream out;
    out << std::string(name_w, ' ')
        << "  w/o background     all  structure only  background only  w/o structure\n";
    for (const auto& [name, r] : rows) {
        out << name << std::string(name_w - name.size(), ' ') << "  " << std::string(8, ' ')
            << cell(r.wo_background) << "  " << cell(r.all) << "  " << std::string(8, ' ')
            << cell(r.structure_only) << "  " << std::string(9, ' ') << cell(r.background_only)
            << "  " << std::string(7, ' ') << cell(r.wo_structure) << "\n";
    }
    return out.str();
}

std::string report_to_json(const IoUReport& report, const LabelVocabulary& vocab) {
    nlohmann::json j;
    std::map<int, std::string> names;
    for (const auto& [name, label] : vocab.grid_labels) names[label] = name;
    for (const auto& [label, iou] : report.per_class) {
        const std::string name = names.count(label) ? names[label] : std::to_string(label);
        j["per_class"][name] = iou ? nlohmann::json(*iou) : nlohmann::json(nullptr);
        const auto& t = report.counts.at(label);
        j["counts"][name] = {{"intersection", t.intersection}, {"union", t.unions}};
    }
    auto put = [&](const char* key, const std::optional<double>& v) {
        j["variants"][key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    put("wo_background", report.wo_background);
    put("all", report.all);
    put("structure_only", report.structure_only);
    put("background_only", report.background_only);
    put("wo_structure", report.wo_structure);
    return j.dump(2);
}

}  // namespace floorplan::eval

namespace floorplan::serial {

TallyMap tally(const Grid& pred, const Grid& truth, const LabelVocabulary& vocab) {
    if (pred.width != truth.width || pred.height != truth.height)
        throw std::invalid_argument("grid dimension mismatch");
    TallyMap out;
    for (const auto& [name, label] : vocab.grid_labels) out[label] = {0, 0};
    for (std::size_t i = 0; i < pred.cells.size(); ++i) {
        const int p = pred.cells[i];
        const int t = truth.cells[i];
        for (auto& [label, counts] : out) {
            const bool ip = p == label;
            const bool it = t == label;
            counts.intersection += ip && it ? 1 : 0;
            counts.unions += ip || it ? 1 : 0;
        }
    }
    return out;
}

}  // namespace floorplan::serial
