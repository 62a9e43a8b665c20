#include "narranet/interaction_log.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>

#include "narranet/errors.hpp"

namespace narranet {

namespace {

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

std::string trim(const std::string& s) {
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

int parse_index(const std::string& field, const char* what, std::size_t lineno) {
    int value = 0;
    const std::string t = trim(field);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || value < 0) {
        throw ParseError(std::string(what) + " must be a non-negative integer, got '" +
                             field + "'",
                         lineno);
    }
    return value;
}

}  // namespace

InteractionLog parse_interaction_log(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("empty input, expected header '" +
                             std::string(kInteractionCsvHeader) + "'",
                         1);
    }
    strip_cr(line);
    if (line != kInteractionCsvHeader) {
        throw ParseError("expected header '" + std::string(kInteractionCsvHeader) +
                             "', got '" + line + "'",
                         1);
    }

    InteractionLog log;
    // Highest scene index seen so far per (season, episode).
    std::map<std::pair<int, int>, int> last_scene;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) {
            continue;
        }
        if (line == kInteractionCsvHeader) {
            throw ParseError("header repeated mid-file", lineno);
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
        if (fields.size() != 5) {
            throw ParseError("expected 5 comma-separated fields, got " +
                                 std::to_string(fields.size()),
                             lineno);
        }

        InteractionRecord rec;
        rec.season = parse_index(fields[0], "season", lineno);
        rec.episode = parse_index(fields[1], "episode", lineno);
        rec.scene = parse_index(fields[2], "scene", lineno);
        rec.char_a = trim(fields[3]);
        rec.char_b = trim(fields[4]);
        if (rec.char_a.empty() || rec.char_b.empty()) {
            throw ParseError("empty character name", lineno);
        }
        if (rec.char_a == rec.char_b) {
            throw ParseError("self-interaction for '" + rec.char_a + "'", lineno);
        }

        auto [it, inserted] =
            last_scene.try_emplace({rec.season, rec.episode}, rec.scene);
        if (!inserted) {
            if (rec.scene < it->second) {
                throw ParseError("scene index decreases within season " +
                                     std::to_string(rec.season) + " episode " +
                                     std::to_string(rec.episode),
                                 lineno);
            }
            it->second = rec.scene;
        }
        log.records.push_back(std::move(rec));
    }
    return log;
}

void write_interaction_log(std::ostream& out, const InteractionLog& log) {
    out << kInteractionCsvHeader << '\n';
    for (const auto& r : log.records) {
        out << r.season << ',' << r.episode << ',' << r.scene << ',' << r.char_a << ','
            << r.char_b << '\n';
    }
}

InteractionLog read_interaction_log_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open interaction log '" + path.string() + "'");
    }
    try {
        return parse_interaction_log(in);
    } catch (const ParseError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

std::map<TimeSlice, WeightedGraph> log_to_graphs(const InteractionLog& log,
                                                 Granularity granularity) {
    std::map<TimeSlice, WeightedGraph> graphs;
    for (const auto& r : log.records) {
        const TimeSlice slice{r.season,
                              granularity == Granularity::episode ? r.episode : 0};
        graphs[slice].add_weight(r.char_a, r.char_b, 1);
    }
    return graphs;
}

}  // namespace narranet
