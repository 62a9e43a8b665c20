#include "narranet/season_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "narranet/errors.hpp"
#include "double_text.hpp"

namespace narranet {

CharacterPartition CharacterPartition::split(const std::set<NodeId>& characters,
                                             const std::set<NodeId>& core) {
    if (core.empty()) {
        throw DataError("core character set is empty");
    }
    CharacterPartition p;
    for (const NodeId& c : core) {
        if (!characters.contains(c)) {
            throw DataError("core character '" + c + "' is not in the character set");
        }
    }
    p.core = core;
    for (const NodeId& c : characters) {
        if (!core.contains(c)) {
            p.non_core.insert(c);
        }
    }
    return p;
}

std::set<NodeId> CharacterPartition::all() const {
    std::set<NodeId> out = core;
    out.insert(non_core.begin(), non_core.end());
    return out;
}

SeasonModel fit(const WeightedGraph& g, const CharacterPartition& partition, int season) {
    if (partition.all() != g.nodes()) {
        throw DataError("partition does not cover exactly the graph's character set");
    }
    const auto n_core = static_cast<std::uint64_t>(partition.core.size());
    const auto n_non = static_cast<std::uint64_t>(partition.non_core.size());
    const std::uint64_t cc_pairs = n_core * (n_core - 1) / 2;
    const std::uint64_t nn_pairs = n_non * (n_non - 1) / 2;
    const std::uint64_t cn_pairs = n_core * n_non;
    if (cc_pairs == 0) {
        throw EmptyClassError("no core-core pair (need at least two core characters)");
    }
    if (cn_pairs == 0) {
        throw EmptyClassError("no core-non-core pair (no non-core characters)");
    }
    if (nn_pairs == 0) {
        throw EmptyClassError(
            "no non-core pair (need at least two non-core characters)");
    }

    // The mean over all candidate pairs: absent pairs are zero-weight
    // observations, so only the present edges contribute to the sums.
    std::uint64_t cc_sum = 0;
    std::uint64_t cn_sum = 0;
    std::uint64_t nn_sum = 0;
    for (const auto& [pair, w] : g.edges()) {
        const int cores = static_cast<int>(partition.core.contains(pair.first)) +
                          static_cast<int>(partition.core.contains(pair.second));
        (cores == 2 ? cc_sum : cores == 1 ? cn_sum : nn_sum) += w;
    }

    SeasonModel model;
    model.partition = partition;
    model.season = season;
    model.lambda_cc = static_cast<double>(cc_sum) / static_cast<double>(cc_pairs);
    model.lambda_cn = static_cast<double>(cn_sum) / static_cast<double>(cn_pairs);
    model.lambda_nn = static_cast<double>(nn_sum) / static_cast<double>(nn_pairs);
    return model;
}

SeasonNetwork simulate_season(const SeasonModel& model, RandomStream& rng, int replicate) {
    const std::set<NodeId> cast = model.partition.all();
    std::vector<std::pair<NodeId, bool>> members;  // (name, is_core), sorted
    members.reserve(cast.size());
    for (const NodeId& c : cast) {
        members.emplace_back(c, model.partition.core.contains(c));
    }

    SeasonNetwork net;
    net.replicate = replicate;
    for (const auto& [name, is_core] : members) {
        net.graph.add_node(name);
    }
    // Pair visiting order is fixed (sorted), so one stream state maps to
    // exactly one network.
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const int cores = static_cast<int>(members[i].second) +
                              static_cast<int>(members[j].second);
            const double lambda = cores == 2   ? model.lambda_cc
                                  : cores == 1 ? model.lambda_cn
                                               : model.lambda_nn;
            const std::uint64_t w = rng.poisson(lambda);
            if (w > 0) {
                net.graph.add_weight(members[i].first, members[j].first, w);
            }
        }
    }
    return net;
}

namespace {

std::string join_names(const std::set<NodeId>& names) {
    std::string out;
    for (const NodeId& n : names) {
        if (!out.empty()) {
            out += ',';
        }
        out += n;
    }
    return out;
}

std::set<NodeId> split_names(const std::string& text, const std::string& what) {
    std::set<NodeId> names;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        std::string name = text.substr(start, comma - start);
        // trim spaces
        while (!name.empty() && name.front() == ' ') {
            name.erase(name.begin());
        }
        while (!name.empty() && name.back() == ' ') {
            name.pop_back();
        }
        if (!name.empty()) {
            if (name.find_first_of("\t") != std::string::npos) {
                throw DataError(what + " name contains a tab: '" + name + "'");
            }
            if (!names.insert(name).second) {
                throw DataError(what + " lists '" + name + "' twice");
            }
        }
        if (comma == text.size()) {
            break;
        }
        start = comma + 1;
    }
    return names;
}

}  // namespace

void write_season_model(std::ostream& out, const SeasonModel& model) {
    out << "season = " << model.season << '\n';
    out << "lambda_cc = " << detail::format_double(model.lambda_cc) << '\n';
    out << "lambda_cn = " << detail::format_double(model.lambda_cn) << '\n';
    out << "lambda_nn = " << detail::format_double(model.lambda_nn) << '\n';
    out << "core = " << join_names(model.partition.core) << '\n';
    out << "characters = " << join_names(model.partition.all()) << '\n';
}

SeasonModel read_season_model(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'key = value'", lineno);
        }
        auto trim = [](std::string s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
                s.erase(s.begin());
            }
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
                s.pop_back();
            }
            return s;
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        static const std::set<std::string> known = {
            "season", "lambda_cc", "lambda_cn", "lambda_nn", "core", "characters"};
        if (!known.contains(key)) {
            throw ParseError("unknown key '" + key + "'", lineno);
        }
        if (!kv.emplace(key, value).second) {
            throw ParseError("key '" + key + "' repeated", lineno);
        }
    }
    for (const char* required :
         {"season", "lambda_cc", "lambda_cn", "lambda_nn", "core", "characters"}) {
        if (!kv.contains(required)) {
            throw DataError("model file is missing key '" + std::string(required) + "'");
        }
    }

    SeasonModel model;
    {
        const std::string& text = kv["season"];
        auto [ptr, ec] =
            std::from_chars(text.data(), text.data() + text.size(), model.season);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            throw DataError("season is not an integer: '" + text + "'");
        }
    }
    model.lambda_cc = detail::parse_double(kv["lambda_cc"], "lambda_cc");
    model.lambda_cn = detail::parse_double(kv["lambda_cn"], "lambda_cn");
    model.lambda_nn = detail::parse_double(kv["lambda_nn"], "lambda_nn");
    for (const double l : {model.lambda_cc, model.lambda_cn, model.lambda_nn}) {
        if (!(l >= 0.0) || !std::isfinite(l)) {
            throw DataError("rates must be finite and non-negative");
        }
    }
    const std::set<NodeId> core = split_names(kv["core"], "core");
    const std::set<NodeId> characters = split_names(kv["characters"], "characters");
    model.partition = CharacterPartition::split(characters, core);
    return model;
}

void write_season_model_file(const std::filesystem::path& path, const SeasonModel& model) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot open '" + path.string() + "' for writing");
    }
    write_season_model(out, model);
    if (!out.flush()) {
        throw DataError("write to '" + path.string() + "' failed");
    }
}

SeasonModel read_season_model_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open model file '" + path.string() + "'");
    }
    try {
        return read_season_model(in);
    } catch (const ParseError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

}  // namespace narranet
