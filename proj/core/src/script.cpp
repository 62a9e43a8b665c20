#include "narranet/script.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>

#include "narranet/errors.hpp"

namespace narranet {

namespace {

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

bool is_space(char c) {
    return c == ' ' || c == '\t';
}

std::string_view trimmed_view(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) {
        ++b;
    }
    while (e > b && is_space(s[e - 1])) {
        --e;
    }
    return std::string_view(s).substr(b, e - b);
}

// Speaker-name plausibility filter for `NAME: dialogue` lines. Prose
// sentences containing a colon slip through the cheap split; this keeps the
// obvious non-names out and routes the borderline rest into warnings.
bool plausible_speaker(const std::string& name) {
    if (name.empty() || name.size() > 40) {
        return false;
    }
    bool has_alpha = false;
    int words = 1;
    for (const char c : name) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalpha(uc)) {
            has_alpha = true;
            continue;
        }
        if (c == ' ') {
            ++words;
            continue;
        }
        if (std::isdigit(uc) || c == '.' || c == '\'' || c == '-' || c == '&' ||
            c == '/') {
            continue;
        }
        return false;
    }
    // More than four words before the colon is a prose sentence, not a name.
    return has_alpha && words <= 4;
}

}  // namespace

std::string normalize_name(const std::string& raw) {
    const std::string_view t = trimmed_view(raw);
    std::string out;
    out.reserve(t.size());
    for (const char c : t) {
        out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    return out;
}

AliasMap::AliasMap(const std::vector<std::pair<std::string, std::string>>& rules) {
    for (const auto& [alias, canonical] : rules) {
        // First rule wins, matching top-to-bottom application.
        lookup_.try_emplace(normalize_name(alias), normalize_name(canonical));
    }
    for (const auto& [alias, canonical] : lookup_) {
        auto it = lookup_.find(canonical);
        if (it != lookup_.end() && it->second != canonical) {
            throw DataError("canonical name '" + canonical + "' is itself aliased to '" +
                            it->second + "'");
        }
    }
}

AliasMap AliasMap::parse(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> rules;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (trimmed_view(line).empty()) {
            continue;
        }
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError("expected 'alias<TAB>canonical'", lineno);
        }
        std::string alias = normalize_name(line.substr(0, tab));
        std::string canonical = normalize_name(line.substr(tab + 1));
        if (alias.empty() || canonical.empty()) {
            throw ParseError("empty alias or canonical name", lineno);
        }
        rules.emplace_back(std::move(alias), std::move(canonical));
    }
    return AliasMap(rules);
}

std::string AliasMap::resolve(const std::string& raw_name) const {
    const std::string name = normalize_name(raw_name);
    auto it = lookup_.find(name);
    return it == lookup_.end() ? name : it->second;
}

ScriptParseResult parse_script(std::istream& in, const AliasMap& aliases,
                               const ScriptParseOptions& options) {
    ScriptParseResult result;
    bool marker_seen = false;
    int scene_no = 0;
    std::vector<NodeId> speakers;
    std::set<NodeId> speaker_set;

    auto flush_scene = [&] {
        if (!speakers.empty()) {
            ++scene_no;
            result.scenes.push_back({options.episode, scene_no, speakers});
        }
        speakers.clear();
        speaker_set.clear();
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        const std::string_view t = trimmed_view(line);
        if (t.starts_with(options.scene_marker)) {
            flush_scene();
            marker_seen = true;
            continue;
        }
        if (!marker_seen || t.empty()) {
            continue;  // preamble or blank
        }
        if (t.front() == '(' || t.front() == '[') {
            continue;  // stage direction
        }
        const std::size_t colon = t.find(':');
        if (colon == std::string_view::npos) {
            continue;  // prose / scene description
        }
        const std::string raw_name(t.substr(0, colon));
        if (!plausible_speaker(std::string(trimmed_view(raw_name)))) {
            result.warnings.push_back("line " + std::to_string(lineno) +
                                      ": skipped dialogue-like line with implausible "
                                      "speaker '" +
                                      raw_name + "'");
            continue;
        }
        NodeId canonical = aliases.resolve(raw_name);
        if (speaker_set.insert(canonical).second) {
            speakers.push_back(std::move(canonical));
        }
    }
    flush_scene();

    if (!marker_seen) {
        throw DataError("no scene marker '" + options.scene_marker + "' found in script");
    }
    return result;
}

std::map<TimeSlice, WeightedGraph> scenes_to_cooccurrence(
    const std::vector<ScriptScene>& scenes, Granularity granularity) {
    std::map<TimeSlice, WeightedGraph> graphs;
    for (const auto& scene : scenes) {
        const TimeSlice slice{0, granularity == Granularity::episode ? scene.episode : 0};
        WeightedGraph& g = graphs[slice];
        for (std::size_t i = 0; i < scene.speakers.size(); ++i) {
            g.add_node(scene.speakers[i]);
            for (std::size_t j = i + 1; j < scene.speakers.size(); ++j) {
                g.add_weight(scene.speakers[i], scene.speakers[j], 1);
            }
        }
    }
    return graphs;
}

}  // namespace narranet
