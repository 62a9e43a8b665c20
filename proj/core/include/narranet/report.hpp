#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "narranet/compare.hpp"

namespace narranet {

// Everything compared for one replicate's observation triple.
struct ReplicateComparison {
    int replicate = 0;
    std::map<NetworkKind, GlobalMetrics> global;
    CharacterCorrelations characters;
    EdgeCorrelations edges;
};

ReplicateComparison compare_triple(const ObservationTriple& t, const std::set<NodeId>& core);

// Accumulated comparisons of a whole run.
struct CorrelationReport {
    std::set<NodeId> core;
    std::vector<ReplicateComparison> replicates;
};

// Cross-replicate agreement of the global metrics of one comparison's two
// channels (one Pearson per metric over n_replicates paired values).
// clustering_skipped counts replicates where either side's clustering was
// undefined; those pairs are excluded from clustering_pearson.
struct GlobalCorrelations {
    std::optional<double> size = std::nullopt;
    std::optional<double> total_weight = std::nullopt;
    std::optional<double> density = std::nullopt;
    std::optional<double> clustering = std::nullopt;
    std::size_t clustering_skipped = 0;
};

struct ReportAggregates {
    std::size_t replicates = 0;
    std::map<std::pair<Comparison, CharacterMetric>, DistributionSummary> character;
    std::map<std::pair<Comparison, EdgeMode>, DistributionSummary> edge;
    std::map<Comparison, GlobalCorrelations> global;
    // Raw per-channel distributions (density, clustering, normalized size and
    // weight) for box-plot style reporting.
    std::map<NetworkKind, std::map<std::string, DistributionSummary>> networks;
    // Distribution of cooccurrence/manual total-weight ratios.
    DistributionSummary cooc_weight_inflation;
};

ReportAggregates aggregate(const CorrelationReport& report);

// Flat row form of the per-replicate correlations, as written to
// correlations.csv (`replicate,comparison,metric,family,coefficient,defined`).
struct CorrelationRow {
    int replicate = 0;
    std::string comparison;
    std::string metric;
    std::string family;  // "character" or "edge"
    std::optional<double> coefficient = std::nullopt;

    bool operator==(const CorrelationRow&) const = default;
};

std::vector<CorrelationRow> correlation_rows(const CorrelationReport& report);

void write_correlations_csv(std::ostream& out, const std::vector<CorrelationRow>& rows);
std::vector<CorrelationRow> read_correlations_csv(std::istream& in);

// summary.json (stable key order, two-space indent, trailing newline).
void write_summary_json(std::ostream& out, const ReportAggregates& agg);

// trend.csv (`season,avg_core_interactions,dataset`); the fitted line rides
// along as two rows per dataset with "slope" / "intercept" in the season
// column.
void write_trend_csv(std::ostream& out, const std::map<std::string, TrendResult>& by_dataset);
std::map<std::string, TrendResult> read_trend_csv(std::istream& in);

}  // namespace narranet
