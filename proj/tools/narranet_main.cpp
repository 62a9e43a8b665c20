// Command-line front end: fit / simulate / compare / parse-scripts / trend /
// export / rank over the narranet core library.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "narranet/compare.hpp"
#include "narranet/edge_list.hpp"
#include "narranet/errors.hpp"
#include "narranet/extractors.hpp"
#include "narranet/interaction_log.hpp"
#include "narranet/metrics.hpp"
#include "narranet/report.hpp"
#include "narranet/rng.hpp"
#include "narranet/script.hpp"
#include "narranet/season_model.hpp"
#include "narranet/simulate.hpp"
#include "narranet/summary.hpp"
#include "narranet/version.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

std::string trim_spaces(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) {
        ++b;
    }
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) {
        --e;
    }
    return s.substr(b, e - b);
}

std::set<narranet::NodeId> parse_name_list(const std::string& text) {
    std::set<narranet::NodeId> names;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        const std::string name = trim_spaces(text.substr(start, comma - start));
        if (!name.empty()) {
            names.insert(name);
        }
        if (comma == text.size()) {
            break;
        }
        start = comma + 1;
    }
    if (names.empty()) {
        throw narranet::DataError("empty character list '" + text + "'");
    }
    return names;
}

std::string now_iso8601() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void ensure_dir(const fs::path& p) {
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) {
        throw narranet::DataError("cannot create directory '" + p.string() +
                                  "': " + ec.message());
    }
}

unsigned default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Per-season edge lists written by `export` and consumed by trend/rank:
// season_<n>.edges inside one directory.
std::map<int, narranet::WeightedGraph> load_season_dir(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        throw narranet::DataError("'" + dir.string() + "' is not a directory");
    }
    std::map<int, narranet::WeightedGraph> graphs;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) {
            continue;
        }
        const std::string name = entry.path().filename().string();
        constexpr const char* prefix = "season_";
        constexpr const char* suffix = ".edges";
        if (!name.starts_with(prefix) || !name.ends_with(suffix)) {
            continue;
        }
        const std::string digits =
            name.substr(7, name.size() - 7 - 6);  // between prefix and suffix
        if (digits.empty() ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char c) { return c >= '0' && c <= '9'; })) {
            continue;
        }
        graphs.emplace(std::stoi(digits), narranet::read_edge_list_file(entry.path()));
    }
    if (graphs.empty()) {
        throw narranet::DataError("no season_<n>.edges files in '" + dir.string() + "'");
    }
    return graphs;
}

// ---------------------------------------------------------------- fit ------

struct FitOptions {
    std::string interactions;
    std::string core;
    int season = 0;
    std::string out = "model.txt";
};

int run_fit(const FitOptions& opt) {
    const narranet::InteractionLog log =
        narranet::read_interaction_log_file(opt.interactions);
    const auto graphs = narranet::log_to_graphs(log, narranet::Granularity::season);
    const narranet::TimeSlice slice{opt.season, 0};
    auto it = graphs.find(slice);
    if (it == graphs.end()) {
        throw narranet::DataError("no interactions for season " +
                                  std::to_string(opt.season) + " in '" +
                                  opt.interactions + "'");
    }
    const narranet::WeightedGraph& g = it->second;
    const auto partition =
        narranet::CharacterPartition::split(g.nodes(), parse_name_list(opt.core));
    const narranet::SeasonModel model = narranet::fit(g, partition, opt.season);
    narranet::write_season_model_file(opt.out, model);

    std::cout << "season " << model.season << ": " << partition.core.size()
              << " core / " << partition.non_core.size() << " non-core characters\n"
              << "lambda_cc = " << model.lambda_cc << '\n'
              << "lambda_cn = " << model.lambda_cn << '\n'
              << "lambda_nn = " << model.lambda_nn << '\n'
              << "model written to " << opt.out << '\n';
    return kExitOk;
}

// ----------------------------------------------------------- simulate ------

struct SimulateOptions {
    std::string model;
    std::string out;
    int n_sims = 10000;
    int scenes = 15;
    int ints_per_scene = 4;
    double rewire_prob = 0.3;
    std::uint64_t seed = 0;
    unsigned threads = default_threads();
    bool keep_episodes = false;
    std::string config;
};

// Fills every option the command line left untouched from the JSON config
// file; explicit flags win.
void apply_config_file(SimulateOptions& opt, const std::map<std::string, bool>& set_on_cli) {
    std::ifstream in(opt.config);
    if (!in) {
        throw narranet::DataError("cannot open config file '" + opt.config + "'");
    }
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw narranet::DataError("config file '" + opt.config + "': " + e.what());
    }
    if (!j.is_object()) {
        throw narranet::DataError("config file must hold a JSON object");
    }
    auto take = [&](const char* key, auto& slot) {
        using T = std::decay_t<decltype(slot)>;
        if (!j.contains(key) || set_on_cli.at(key)) {
            return;
        }
        try {
            slot = j.at(key).get<T>();
        } catch (const nlohmann::json::exception&) {
            throw narranet::DataError("config key '" + std::string(key) +
                                      "' has the wrong type");
        }
    };
    take("n_sims", opt.n_sims);
    take("scenes", opt.scenes);
    take("ints_per_scene", opt.ints_per_scene);
    take("rewire_prob", opt.rewire_prob);
    take("seed", opt.seed);
    take("threads", opt.threads);
    take("keep_episodes", opt.keep_episodes);
    for (const auto& [key, value] : j.items()) {
        static const std::set<std::string> known = {
            "n_sims", "scenes", "ints_per_scene", "rewire_prob",
            "seed",   "threads", "keep_episodes"};
        if (!known.contains(key)) {
            throw narranet::DataError("config file has unknown key '" + key + "'");
        }
    }
}

int run_simulate(const SimulateOptions& opt) {
    const std::string started = now_iso8601();
    const narranet::SeasonModel model = narranet::read_season_model_file(opt.model);

    narranet::SimConfig cfg;
    cfg.n_replicates = opt.n_sims;
    cfg.n_scenes = opt.scenes;
    cfg.n_interactions_per_scene = opt.ints_per_scene;
    cfg.rewire_prob = opt.rewire_prob;
    cfg.seed = opt.seed;
    cfg.validate();

    const fs::path out_dir(opt.out);
    ensure_dir(out_dir);

    auto sink = [&](narranet::ReplicatePair&& pair) {
        const fs::path rep_dir = out_dir / ("rep_" + std::to_string(pair.index));
        ensure_dir(rep_dir);
        // The extraction channel gets its own per-replicate stream (derived
        // from the bit-flipped seed) so it cannot disturb the simulation
        // stream and stays reproducible on its own.
        narranet::RandomStream rng = narranet::RandomStream::child(
            ~cfg.seed, static_cast<std::uint64_t>(pair.index));
        const narranet::ObservationTriple triple =
            narranet::extract_all(pair.episode, cfg.rewire_prob, rng);
        narranet::write_edge_list_file(rep_dir / "manual.edges", triple.manual);
        narranet::write_edge_list_file(rep_dir / "cooc.edges", triple.cooccurrence);
        narranet::write_edge_list_file(rep_dir / "nlp.edges", triple.nlp);
        if (opt.keep_episodes) {
            std::ofstream ep(rep_dir / "episode.txt");
            narranet::write_episode(ep, pair.episode);
        }
    };
    const narranet::RunStats stats =
        narranet::run_replicates(model, cfg, sink, opt.threads);

    // The manifest is written last: its presence marks a complete run.
    ordered_json manifest;
    manifest["tool"] = "narranet";
    manifest["version"] = narranet::kVersion;
    manifest["command"] = "simulate";
    manifest["model_file"] = opt.model;
    ordered_json config;
    config["n_sims"] = opt.n_sims;
    config["scenes"] = opt.scenes;
    config["ints_per_scene"] = opt.ints_per_scene;
    config["rewire_prob"] = opt.rewire_prob;
    config["seed"] = opt.seed;
    config["threads"] = opt.threads;
    manifest["config"] = config;
    manifest["core"] = std::vector<std::string>(model.partition.core.begin(),
                                                model.partition.core.end());
    manifest["characters"] = model.partition.all().size();
    manifest["replicates_completed"] = stats.completed;
    manifest["skipped"] = stats.skipped;
    manifest["started_at"] = started;
    manifest["finished_at"] = now_iso8601();
    {
        std::ofstream mf(out_dir / "manifest.json");
        if (!mf) {
            throw narranet::DataError("cannot write manifest in '" + opt.out + "'");
        }
        mf << manifest.dump(2) << '\n';
    }

    std::cout << "completed " << stats.completed << " replicates ("
              << stats.skipped.size() << " skipped) -> " << opt.out << '\n';
    return kExitOk;
}

// ------------------------------------------------------------ compare ------

struct CompareOptions {
    std::string run;
    std::string core;  // empty = take the manifest's core list
    std::string out;   // empty = the run directory
    unsigned threads = default_threads();
};

int run_compare(const CompareOptions& opt) {
    const fs::path run_dir(opt.run);
    const fs::path manifest_path = run_dir / "manifest.json";
    std::ifstream mf(manifest_path);
    if (!mf) {
        throw narranet::DataError("cannot open '" + manifest_path.string() +
                                  "' (is this a simulate output directory?)");
    }
    ordered_json manifest;
    try {
        manifest = ordered_json::parse(mf);
    } catch (const nlohmann::json::exception& e) {
        throw narranet::DataError("bad manifest: " + std::string(e.what()));
    }

    int n_sims = 0;
    std::set<int> skipped;
    std::set<narranet::NodeId> core;
    try {
        n_sims = manifest.at("config").at("n_sims").get<int>();
        for (const auto& v : manifest.at("skipped")) {
            skipped.insert(v.get<int>());
        }
        for (const auto& v : manifest.at("core")) {
            core.insert(v.get<std::string>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw narranet::DataError("bad manifest: " + std::string(e.what()));
    }
    if (!opt.core.empty()) {
        core = parse_name_list(opt.core);
    }

    std::vector<int> indices;
    for (int k = 0; k < n_sims; ++k) {
        if (skipped.contains(k)) {
            continue;
        }
        if (!fs::is_directory(run_dir / ("rep_" + std::to_string(k)))) {
            throw narranet::MissingReplicateError(
                "replicate directory rep_" + std::to_string(k) +
                " is missing from '" + opt.run + "'");
        }
        indices.push_back(k);
    }

    narranet::CorrelationReport report;
    report.core = core;
    report.replicates.resize(indices.size());

    // Replicates are independent; read + compare in blocks, results land in
    // index order.
    const unsigned threads = std::max(1u, opt.threads);
    const std::size_t block = static_cast<std::size_t>(threads) * 8;
    for (std::size_t lo = 0; lo < indices.size(); lo += block) {
        const std::size_t hi = std::min(indices.size(), lo + block);
        std::vector<std::string> errors(hi - lo);
        std::vector<char> failed(hi - lo, 0);
        std::atomic<std::size_t> next{lo};
        auto work = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= hi) {
                    return;
                }
                try {
                    const int k = indices[i];
                    const fs::path rep_dir = run_dir / ("rep_" + std::to_string(k));
                    narranet::ObservationTriple triple;
                    triple.replicate = k;
                    triple.manual = narranet::read_edge_list_file(rep_dir / "manual.edges");
                    triple.cooccurrence =
                        narranet::read_edge_list_file(rep_dir / "cooc.edges");
                    triple.nlp = narranet::read_edge_list_file(rep_dir / "nlp.edges");
                    report.replicates[i] = narranet::compare_triple(triple, core);
                } catch (const std::exception& e) {
                    errors[i - lo] = e.what();
                    failed[i - lo] = 1;
                }
            }
        };
        if (threads == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back(work);
            }
            for (std::thread& t : pool) {
                t.join();
            }
        }
        for (std::size_t i = lo; i < hi; ++i) {
            if (failed[i - lo]) {
                throw narranet::DataError("replicate " + std::to_string(indices[i]) +
                                          ": " + errors[i - lo]);
            }
        }
    }

    const fs::path out_dir = opt.out.empty() ? run_dir : fs::path(opt.out);
    ensure_dir(out_dir);
    {
        std::ofstream csv(out_dir / "correlations.csv");
        if (!csv) {
            throw narranet::DataError("cannot write correlations.csv");
        }
        narranet::write_correlations_csv(csv, narranet::correlation_rows(report));
    }
    const narranet::ReportAggregates agg = narranet::aggregate(report);
    {
        std::ofstream js(out_dir / "summary.json");
        if (!js) {
            throw narranet::DataError("cannot write summary.json");
        }
        narranet::write_summary_json(js, agg);
    }

    std::cout << "compared " << report.replicates.size() << " replicates -> "
              << (out_dir / "correlations.csv").string() << ", "
              << (out_dir / "summary.json").string() << '\n';
    for (const narranet::Comparison cmp : narranet::kComparisons) {
        const auto& deg =
            agg.character.at({cmp, narranet::CharacterMetric::degree});
        const auto& gc = agg.global.at(cmp);
        std::cout << "  " << to_string(cmp) << ": median degree spearman ";
        if (deg.count > 0) {
            std::cout << deg.median;
        } else {
            std::cout << "undefined";
        }
        std::cout << ", density pearson ";
        if (gc.density.has_value()) {
            std::cout << *gc.density;
        } else {
            std::cout << "undefined";
        }
        std::cout << '\n';
    }
    return kExitOk;
}

// ------------------------------------------------------- parse-scripts -----

struct ParseScriptsOptions {
    std::string scripts;
    std::string aliases;
    std::string scene_marker = "[Scene:";
    std::string out;
    std::string season_out;
};

int run_parse_scripts(const ParseScriptsOptions& opt) {
    const fs::path scripts_dir(opt.scripts);
    if (!fs::is_directory(scripts_dir)) {
        throw narranet::DataError("'" + opt.scripts + "' is not a directory");
    }
    narranet::AliasMap aliases;
    if (!opt.aliases.empty()) {
        std::ifstream in(opt.aliases);
        if (!in) {
            throw narranet::DataError("cannot open alias map '" + opt.aliases + "'");
        }
        aliases = narranet::AliasMap::parse(in);
    }

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(scripts_dir)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw narranet::DataError("no script files in '" + opt.scripts + "'");
    }

    ensure_dir(opt.out);
    std::ofstream warnings_log(fs::path(opt.out) / "parse_warnings.log");
    std::vector<narranet::ScriptScene> all_scenes;
    int episode = 0;
    int parsed_files = 0;
    for (const fs::path& file : files) {
        ++episode;
        std::ifstream in(file);
        if (!in) {
            throw narranet::DataError("cannot open script '" + file.string() + "'");
        }
        narranet::ScriptParseOptions parse_opt;
        parse_opt.scene_marker = opt.scene_marker;
        parse_opt.episode = episode;
        narranet::ScriptParseResult result;
        try {
            result = narranet::parse_script(in, aliases, parse_opt);
        } catch (const narranet::DataError& e) {
            // A file without a single scene marker is reported, not fatal.
            std::cerr << file.filename().string() << ": " << e.what() << '\n';
            warnings_log << file.filename().string() << ": " << e.what() << '\n';
            continue;
        }
        for (const std::string& w : result.warnings) {
            warnings_log << file.filename().string() << ": " << w << '\n';
        }
        const auto graphs = narranet::scenes_to_cooccurrence(
            result.scenes, narranet::Granularity::episode);
        narranet::WeightedGraph episode_graph;  // empty when no scene survived
        if (!graphs.empty()) {
            episode_graph = graphs.begin()->second;
        }
        narranet::write_edge_list_file(
            fs::path(opt.out) / (file.stem().string() + ".edges"), episode_graph);
        all_scenes.insert(all_scenes.end(), result.scenes.begin(), result.scenes.end());
        ++parsed_files;

        std::set<narranet::NodeId> speakers;
        for (const auto& scene : result.scenes) {
            speakers.insert(scene.speakers.begin(), scene.speakers.end());
        }
        std::cout << file.filename().string() << ": " << result.scenes.size()
                  << " scenes, " << speakers.size() << " speakers\n";
    }
    if (parsed_files == 0) {
        throw narranet::DataError("no script file could be parsed");
    }

    if (!opt.season_out.empty()) {
        const auto graphs = narranet::scenes_to_cooccurrence(
            all_scenes, narranet::Granularity::season);
        narranet::WeightedGraph season_graph;
        if (!graphs.empty()) {
            season_graph = graphs.begin()->second;
        }
        narranet::write_edge_list_file(opt.season_out, season_graph);
        std::cout << "season co-occurrence -> " << opt.season_out << '\n';
    }
    return kExitOk;
}

// -------------------------------------------------------------- trend ------

struct TrendOptions {
    std::vector<std::string> datasets;  // name=dir
    std::string core;
    std::string out = "trend.csv";
};

int run_trend(const TrendOptions& opt) {
    const std::set<narranet::NodeId> core = parse_name_list(opt.core);
    std::map<std::string, narranet::TrendResult> results;
    for (const std::string& spec_text : opt.datasets) {
        const std::size_t eq = spec_text.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= spec_text.size()) {
            throw narranet::DataError("dataset must be NAME=DIR, got '" + spec_text + "'");
        }
        const std::string name = spec_text.substr(0, eq);
        const std::string dir = spec_text.substr(eq + 1);
        if (results.contains(name)) {
            throw narranet::DataError("dataset '" + name + "' given twice");
        }
        const auto graphs = load_season_dir(dir);
        results.emplace(name, narranet::trend_core_interactions(graphs, core));
    }
    {
        std::ofstream out(opt.out);
        if (!out) {
            throw narranet::DataError("cannot write '" + opt.out + "'");
        }
        narranet::write_trend_csv(out, results);
    }
    for (const auto& [name, result] : results) {
        std::cout << name << ": slope " << result.fit.slope << ", intercept "
                  << result.fit.intercept << " over " << result.points.size()
                  << " seasons\n";
    }
    std::cout << "trend table -> " << opt.out << '\n';
    return kExitOk;
}

// ------------------------------------------------------------- export ------

struct ExportOptions {
    std::string interactions;
    std::string granularity = "season";
    std::string out;
    bool print_summary = false;
};

int run_export(const ExportOptions& opt) {
    const narranet::InteractionLog log =
        narranet::read_interaction_log_file(opt.interactions);
    const narranet::Granularity granularity = opt.granularity == "episode"
                                                  ? narranet::Granularity::episode
                                                  : narranet::Granularity::season;
    const auto graphs = narranet::log_to_graphs(log, granularity);
    if (graphs.empty()) {
        throw narranet::DataError("interaction log is empty");
    }
    ensure_dir(opt.out);
    for (const auto& [slice, graph] : graphs) {
        std::string name;
        if (granularity == narranet::Granularity::season) {
            name = "season_" + std::to_string(slice.season) + ".edges";
        } else {
            name = "season_" + std::to_string(slice.season) + "_episode_" +
                   std::to_string(slice.episode) + ".edges";
        }
        narranet::write_edge_list_file(fs::path(opt.out) / name, graph);
    }
    std::cout << "wrote " << graphs.size() << " edge lists -> " << opt.out << '\n';
    if (opt.print_summary) {
        narranet::write_summary_table(
            std::cout, narranet::summarize(log, narranet::scene_counts_from_log(log)));
    }
    return kExitOk;
}

// --------------------------------------------------------------- rank ------

struct RankOptions {
    std::string dataset;
    std::string character;
    std::string metric = "betweenness";
    std::string out;
};

int run_rank(const RankOptions& opt) {
    const auto metric = narranet::character_metric_from_string(opt.metric);
    if (!metric.has_value()) {
        throw narranet::DataError("unknown metric '" + opt.metric + "'");
    }
    const auto graphs = load_season_dir(opt.dataset);
    const auto ranks = narranet::rank_character(graphs, *metric, opt.character);
    std::ostringstream table;
    table << "season,rank\n";
    for (const auto& [season, rank] : ranks) {
        table << season << ',' << rank << '\n';
    }
    std::cout << opt.character << " by " << opt.metric << ":\n" << table.str();
    if (!opt.out.empty()) {
        std::ofstream out(opt.out);
        if (!out) {
            throw narranet::DataError("cannot write '" + opt.out + "'");
        }
        out << table.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Narrative social network simulation and observation-channel comparison"};
    app.set_version_flag("--version", std::string("narranet ") + narranet::kVersion);
    app.require_subcommand(1);

    FitOptions fit_opt;
    CLI::App* fit_cmd =
        app.add_subcommand("fit", "Fit a two-class Poisson season model from an interaction CSV");
    fit_cmd->add_option("--interactions", fit_opt.interactions, "Interaction CSV file")
        ->required();
    fit_cmd->add_option("--core", fit_opt.core, "Comma-separated core character names")
        ->required();
    fit_cmd->add_option("--season", fit_opt.season, "Season to fit")->required();
    fit_cmd->add_option("--out", fit_opt.out, "Output model file")
        ->capture_default_str();

    SimulateOptions sim_opt;
    CLI::App* sim_cmd = app.add_subcommand(
        "simulate", "Sample synthetic seasons + episodes and extract the three channels");
    sim_cmd->add_option("--model", sim_opt.model, "Season model file")->required();
    sim_cmd->add_option("--out", sim_opt.out, "Run output directory")->required();
    CLI::Option* o_nsims =
        sim_cmd->add_option("--n-sims", sim_opt.n_sims, "Number of replicates")
            ->capture_default_str();
    CLI::Option* o_scenes =
        sim_cmd->add_option("--scenes", sim_opt.scenes, "Scenes per episode")
            ->capture_default_str();
    CLI::Option* o_ints = sim_cmd
                              ->add_option("--ints-per-scene", sim_opt.ints_per_scene,
                                           "Interactions per scene")
                              ->capture_default_str();
    CLI::Option* o_rewire =
        sim_cmd
            ->add_option("--rewire-prob", sim_opt.rewire_prob,
                         "Listener rewiring probability for the nlp channel")
            ->capture_default_str();
    CLI::Option* o_seed =
        sim_cmd->add_option("--seed", sim_opt.seed, "Base seed")->capture_default_str();
    CLI::Option* o_threads =
        sim_cmd->add_option("--threads", sim_opt.threads, "Worker threads")
            ->capture_default_str();
    CLI::Option* o_keep = sim_cmd->add_flag("--keep-episodes", sim_opt.keep_episodes,
                                            "Also write episode.txt per replicate");
    sim_cmd->add_option("--config", sim_opt.config,
                        "JSON file mirroring the flags (explicit flags win)");

    CompareOptions cmp_opt;
    CLI::App* cmp_cmd = app.add_subcommand(
        "compare", "Compare the extracted channels of a simulation run");
    cmp_cmd->add_option("--run", cmp_opt.run, "Simulation run directory")->required();
    cmp_cmd->add_option("--core", cmp_opt.core,
                        "Core characters (default: the run manifest's list)");
    cmp_cmd->add_option("--out", cmp_opt.out, "Output directory (default: the run dir)");
    cmp_cmd->add_option("--threads", cmp_opt.threads, "Worker threads")
        ->capture_default_str();

    ParseScriptsOptions ps_opt;
    CLI::App* ps_cmd = app.add_subcommand(
        "parse-scripts", "Build per-episode co-occurrence networks from screenplay files");
    ps_cmd->add_option("--scripts", ps_opt.scripts, "Directory of script files")
        ->required();
    ps_cmd->add_option("--aliases", ps_opt.aliases, "alias<TAB>canonical map file");
    ps_cmd->add_option("--scene-marker", ps_opt.scene_marker, "Scene heading prefix")
        ->capture_default_str();
    ps_cmd->add_option("--out", ps_opt.out, "Output directory")->required();
    ps_cmd->add_option("--season-out", ps_opt.season_out,
                       "Also write the season-level aggregate to this file");

    TrendOptions trend_opt;
    CLI::App* trend_cmd = app.add_subcommand(
        "trend", "Core-pair interaction trend across seasons, with a fitted line");
    trend_cmd
        ->add_option("--dataset", trend_opt.datasets,
                     "NAME=DIR with season_<n>.edges files (repeatable)")
        ->required();
    trend_cmd->add_option("--core", trend_opt.core, "Comma-separated core characters")
        ->required();
    trend_cmd->add_option("--out", trend_opt.out, "Output CSV")->capture_default_str();

    ExportOptions exp_opt;
    CLI::App* exp_cmd = app.add_subcommand(
        "export", "Aggregate an interaction CSV into per-slice edge lists");
    exp_cmd->add_option("--interactions", exp_opt.interactions, "Interaction CSV file")
        ->required();
    exp_cmd->add_option("--granularity", exp_opt.granularity, "Slice granularity")
        ->check(CLI::IsMember({"season", "episode"}))
        ->capture_default_str();
    exp_cmd->add_option("--out", exp_opt.out, "Output directory")->required();
    exp_cmd->add_flag("--summary", exp_opt.print_summary,
                      "Print the per-season summary table");

    RankOptions rank_opt;
    CLI::App* rank_cmd = app.add_subcommand(
        "rank", "Per-season rank of one character under a centrality metric");
    rank_cmd->add_option("--dataset", rank_opt.dataset, "Directory of season_<n>.edges")
        ->required();
    rank_cmd->add_option("--character", rank_opt.character, "Character name")->required();
    rank_cmd->add_option("--metric", rank_opt.metric, "Character metric")
        ->check(CLI::IsMember({"degree", "betweenness", "eigenvector", "closeness",
                               "local_clustering"}))
        ->capture_default_str();
    rank_cmd->add_option("--out", rank_opt.out, "Also write the table to this CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*fit_cmd) {
            return run_fit(fit_opt);
        }
        if (*sim_cmd) {
            if (!sim_opt.config.empty()) {
                const std::map<std::string, bool> set_on_cli = {
                    {"n_sims", o_nsims->count() > 0},
                    {"scenes", o_scenes->count() > 0},
                    {"ints_per_scene", o_ints->count() > 0},
                    {"rewire_prob", o_rewire->count() > 0},
                    {"seed", o_seed->count() > 0},
                    {"threads", o_threads->count() > 0},
                    {"keep_episodes", o_keep->count() > 0},
                };
                apply_config_file(sim_opt, set_on_cli);
            }
            return run_simulate(sim_opt);
        }
        if (*cmp_cmd) {
            return run_compare(cmp_opt);
        }
        if (*ps_cmd) {
            return run_parse_scripts(ps_opt);
        }
        if (*trend_cmd) {
            return run_trend(trend_opt);
        }
        if (*exp_cmd) {
            return run_export(exp_opt);
        }
        if (*rank_cmd) {
            return run_rank(rank_opt);
        }
        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const narranet::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const narranet::Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
