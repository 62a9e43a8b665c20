#include "narranet/report.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "narranet/errors.hpp"
#include "double_text.hpp"

namespace narranet {

using ordered_json = nlohmann::ordered_json;

ReplicateComparison compare_triple(const ObservationTriple& t, const std::set<NodeId>& core) {
    ReplicateComparison rc;
    rc.replicate = t.replicate;
    rc.global = compare_global(t);
    rc.characters = compare_characters(t);
    rc.edges = compare_edges(t, core);
    return rc;
}

namespace {

double global_value(const GlobalMetrics& m, int which) {
    switch (which) {
        case 0: return static_cast<double>(m.size);
        case 1: return static_cast<double>(m.total_weight);
        case 2: return m.density;
        default: return m.clustering;
    }
}

}  // namespace

ReportAggregates aggregate(const CorrelationReport& report) {
    ReportAggregates agg;
    agg.replicates = report.replicates.size();

    for (const Comparison cmp : kComparisons) {
        for (const CharacterMetric m : kCharacterMetrics) {
            std::vector<std::optional<double>> values;
            values.reserve(report.replicates.size());
            for (const ReplicateComparison& rc : report.replicates) {
                values.push_back(rc.characters.at({cmp, m}));
            }
            agg.character.emplace(std::pair{cmp, m}, summarize_coefficients(values));
        }
        for (const EdgeMode mode : kEdgeModes) {
            std::vector<std::optional<double>> values;
            values.reserve(report.replicates.size());
            for (const ReplicateComparison& rc : report.replicates) {
                values.push_back(rc.edges.at({cmp, mode}));
            }
            agg.edge.emplace(std::pair{cmp, mode}, summarize_coefficients(values));
        }

        // Global metrics correlate across replicates: one (manual, other)
        // value pair per replicate and metric.
        const NetworkKind other =
            cmp == Comparison::manual_cooc ? NetworkKind::cooccurrence : NetworkKind::nlp;
        GlobalCorrelations gc;
        for (int which = 0; which < 4; ++which) {
            std::vector<double> xs;
            std::vector<double> ys;
            std::size_t skipped = 0;
            for (const ReplicateComparison& rc : report.replicates) {
                const double x = global_value(rc.global.at(NetworkKind::manual), which);
                const double y = global_value(rc.global.at(other), which);
                if (!std::isfinite(x) || !std::isfinite(y)) {
                    ++skipped;
                    continue;
                }
                xs.push_back(x);
                ys.push_back(y);
            }
            const std::optional<double> r = pearson(xs, ys);
            switch (which) {
                case 0: gc.size = r; break;
                case 1: gc.total_weight = r; break;
                case 2: gc.density = r; break;
                default:
                    gc.clustering = r;
                    gc.clustering_skipped = skipped;
                    break;
            }
        }
        agg.global.emplace(cmp, gc);
    }

    for (const NetworkKind kind : kNetworkKinds) {
        std::vector<double> density_v;
        std::vector<double> clustering_v;
        std::vector<double> nsize_v;
        std::vector<double> nweight_v;
        for (const ReplicateComparison& rc : report.replicates) {
            const GlobalMetrics& m = rc.global.at(kind);
            density_v.push_back(m.density);
            clustering_v.push_back(m.clustering);
            nsize_v.push_back(m.normalized_size);
            nweight_v.push_back(m.normalized_weight);
        }
        std::map<std::string, DistributionSummary> dists;
        dists.emplace("density", summarize_values(density_v));
        dists.emplace("clustering", summarize_values(clustering_v));
        dists.emplace("normalized_size", summarize_values(nsize_v));
        dists.emplace("normalized_weight", summarize_values(nweight_v));
        agg.networks.emplace(kind, std::move(dists));
    }

    std::vector<double> inflation;
    for (const ReplicateComparison& rc : report.replicates) {
        const auto manual_w =
            static_cast<double>(rc.global.at(NetworkKind::manual).total_weight);
        const auto cooc_w =
            static_cast<double>(rc.global.at(NetworkKind::cooccurrence).total_weight);
        inflation.push_back(manual_w == 0.0
                                ? std::numeric_limits<double>::quiet_NaN()
                                : cooc_w / manual_w);
    }
    agg.cooc_weight_inflation = summarize_values(inflation);
    return agg;
}

std::vector<CorrelationRow> correlation_rows(const CorrelationReport& report) {
    std::vector<CorrelationRow> rows;
    rows.reserve(report.replicates.size() * 16);
    for (const ReplicateComparison& rc : report.replicates) {
        for (const Comparison cmp : kComparisons) {
            for (const CharacterMetric m : kCharacterMetrics) {
                rows.push_back({rc.replicate, to_string(cmp), to_string(m), "character",
                                rc.characters.at({cmp, m})});
            }
            for (const EdgeMode mode : kEdgeModes) {
                rows.push_back({rc.replicate, to_string(cmp), to_string(mode), "edge",
                                rc.edges.at({cmp, mode})});
            }
        }
    }
    return rows;
}

namespace {

constexpr const char* kCorrelationsHeader =
    "replicate,comparison,metric,family,coefficient,defined";

}  // namespace

void write_correlations_csv(std::ostream& out, const std::vector<CorrelationRow>& rows) {
    out << kCorrelationsHeader << '\n';
    for (const CorrelationRow& r : rows) {
        out << r.replicate << ',' << r.comparison << ',' << r.metric << ',' << r.family
            << ',';
        if (r.coefficient.has_value()) {
            out << detail::format_double(*r.coefficient) << ",1\n";
        } else {
            out << "nan,0\n";
        }
    }
}

std::vector<CorrelationRow> read_correlations_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("empty input, expected correlations header", 1);
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kCorrelationsHeader) {
        throw ParseError("unexpected header '" + line + "'", 1);
    }
    std::vector<CorrelationRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        if (fields.size() != 6) {
            throw ParseError("expected 6 fields", lineno);
        }
        CorrelationRow row;
        {
            auto [ptr, ec] = std::from_chars(
                fields[0].data(), fields[0].data() + fields[0].size(), row.replicate);
            if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size()) {
                throw ParseError("bad replicate index '" + fields[0] + "'", lineno);
            }
        }
        row.comparison = fields[1];
        row.metric = fields[2];
        row.family = fields[3];
        if (row.family != "character" && row.family != "edge") {
            throw ParseError("unknown family '" + row.family + "'", lineno);
        }
        if (fields[5] == "1") {
            row.coefficient = detail::parse_double(fields[4], "coefficient");
        } else if (fields[5] == "0") {
            row.coefficient = std::nullopt;
        } else {
            throw ParseError("defined flag must be 0 or 1", lineno);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

ordered_json json_number(double v) {
    return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

ordered_json json_of_summary(const DistributionSummary& s) {
    ordered_json j;
    j["min"] = json_number(s.min);
    j["q1"] = json_number(s.q1);
    j["median"] = json_number(s.median);
    j["q3"] = json_number(s.q3);
    j["max"] = json_number(s.max);
    j["mean"] = json_number(s.mean);
    j["count"] = s.count;
    j["skipped"] = s.skipped;
    return j;
}

ordered_json json_of_optional(const std::optional<double>& v) {
    return v.has_value() ? json_number(*v) : ordered_json(nullptr);
}

}  // namespace

void write_summary_json(std::ostream& out, const ReportAggregates& agg) {
    ordered_json j;
    j["replicates"] = agg.replicates;

    ordered_json character;
    ordered_json edge;
    ordered_json global;
    for (const Comparison cmp : kComparisons) {
        ordered_json per_metric;
        for (const CharacterMetric m : kCharacterMetrics) {
            per_metric[to_string(m)] = json_of_summary(agg.character.at({cmp, m}));
        }
        character[to_string(cmp)] = per_metric;

        ordered_json per_mode;
        for (const EdgeMode mode : kEdgeModes) {
            per_mode[to_string(mode)] = json_of_summary(agg.edge.at({cmp, mode}));
        }
        edge[to_string(cmp)] = per_mode;

        const GlobalCorrelations& gc = agg.global.at(cmp);
        ordered_json g;
        g["size"] = json_of_optional(gc.size);
        g["total_weight"] = json_of_optional(gc.total_weight);
        g["density"] = json_of_optional(gc.density);
        g["clustering"] = json_of_optional(gc.clustering);
        g["clustering_skipped"] = gc.clustering_skipped;
        global[to_string(cmp)] = g;
    }
    j["character"] = character;
    j["edge"] = edge;
    j["global"] = global;

    ordered_json networks;
    for (const NetworkKind kind : kNetworkKinds) {
        ordered_json dists;
        for (const auto& [name, summary] : agg.networks.at(kind)) {
            dists[name] = json_of_summary(summary);
        }
        networks[to_string(kind)] = dists;
    }
    j["networks"] = networks;
    j["cooc_weight_inflation"] = json_of_summary(agg.cooc_weight_inflation);

    out << j.dump(2) << '\n';
}

namespace {

constexpr const char* kTrendHeader = "season,avg_core_interactions,dataset";

}  // namespace

void write_trend_csv(std::ostream& out, const std::map<std::string, TrendResult>& by_dataset) {
    out << kTrendHeader << '\n';
    for (const auto& [dataset, result] : by_dataset) {
        for (const TrendPoint& p : result.points) {
            out << p.season << ',' << detail::format_double(p.avg_core_interactions)
                << ',' << dataset << '\n';
        }
        out << "slope," << detail::format_double(result.fit.slope) << ',' << dataset
            << '\n';
        out << "intercept," << detail::format_double(result.fit.intercept) << ','
            << dataset << '\n';
    }
}

std::map<std::string, TrendResult> read_trend_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("empty input, expected trend header", 1);
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kTrendHeader) {
        throw ParseError("unexpected header '" + line + "'", 1);
    }
    std::map<std::string, TrendResult> by_dataset;
    std::map<std::string, std::pair<bool, bool>> fit_seen;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                       : line.find(',', c1 + 1);
        if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
            throw ParseError("expected 3 fields", lineno);
        }
        const std::string season_field = line.substr(0, c1);
        const double value =
            detail::parse_double(line.substr(c1 + 1, c2 - c1 - 1), "avg_core_interactions");
        const std::string dataset = line.substr(c2 + 1);
        if (dataset.empty()) {
            throw ParseError("empty dataset name", lineno);
        }
        TrendResult& result = by_dataset[dataset];
        if (season_field == "slope") {
            result.fit.slope = value;
            fit_seen[dataset].first = true;
        } else if (season_field == "intercept") {
            result.fit.intercept = value;
            fit_seen[dataset].second = true;
        } else {
            int season = 0;
            auto [ptr, ec] = std::from_chars(
                season_field.data(), season_field.data() + season_field.size(), season);
            if (ec != std::errc{} || ptr != season_field.data() + season_field.size()) {
                throw ParseError("bad season '" + season_field + "'", lineno);
            }
            result.points.push_back({season, value});
        }
    }
    for (const auto& [dataset, seen] : fit_seen) {
        if (!seen.first || !seen.second) {
            throw DataError("dataset '" + dataset + "' is missing its fitted line");
        }
    }
    for (const auto& [dataset, result] : by_dataset) {
        if (!fit_seen.contains(dataset)) {
            throw DataError("dataset '" + dataset + "' is missing its fitted line");
        }
    }
    return by_dataset;
}

}  // namespace narranet
