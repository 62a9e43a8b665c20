#include "narranet/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "narranet/errors.hpp"

namespace narranet {

namespace {

// Accept files written on Windows as well.
void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

}  // namespace

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
    // The edge map is keyed by normalized pairs and iterates in sorted order,
    // which is exactly the on-disk order the format wants.
    for (const auto& [pair, w] : g.edges()) {
        out << pair.first << '\t' << pair.second << '\t' << w << '\n';
    }
}

WeightedGraph read_edge_list(std::istream& in) {
    WeightedGraph g;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t tab1 = line.find('\t');
        const std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                           : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos) {
            throw ParseError("expected 'a<TAB>b<TAB>weight'", lineno);
        }
        const std::string a = line.substr(0, tab1);
        const std::string b = line.substr(tab1 + 1, tab2 - tab1 - 1);
        const std::string wtext = line.substr(tab2 + 1);
        if (a.empty() || b.empty()) {
            throw ParseError("empty node name", lineno);
        }
        if (a >= b) {
            throw ParseError("pair not order-normalized: '" + a + "' vs '" + b + "'", lineno);
        }
        std::uint64_t w = 0;
        auto [ptr, ec] = std::from_chars(wtext.data(), wtext.data() + wtext.size(), w);
        if (ec != std::errc{} || ptr != wtext.data() + wtext.size() || w == 0) {
            throw ParseError("weight must be a positive integer, got '" + wtext + "'", lineno);
        }
        if (g.weight(a, b) != 0) {
            throw ParseError("duplicate edge '" + a + "' -- '" + b + "'", lineno);
        }
        g.add_weight(a, b, w);
    }
    return g;
}

void write_edge_list_file(const std::filesystem::path& path, const WeightedGraph& g) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot open '" + path.string() + "' for writing");
    }
    write_edge_list(out, g);
    if (!out.flush()) {
        throw DataError("write to '" + path.string() + "' failed");
    }
}

WeightedGraph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open edge list '" + path.string() + "'");
    }
    try {
        return read_edge_list(in);
    } catch (const ParseError& e) {
        // Re-raise with the file named; what() already carries the line.
        throw DataError(path.string() + ": " + e.what());
    }
}

}  // namespace narranet
