#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "narranet/graph.hpp"
#include "narranet/interaction_log.hpp"

namespace narranet {

// Ordered alias -> canonical rewrite rules. Matching is exact after trimming
// and ASCII upper-casing; the first matching rule wins; unknown names pass
// through unchanged. Every canonical name must be a fixed point of the map
// (a canonical that is itself aliased away is a configuration error).
class AliasMap {
public:
    AliasMap() = default;
    explicit AliasMap(const std::vector<std::pair<std::string, std::string>>& rules);

    // Tab-separated `alias<TAB>canonical` lines; blank lines ignored.
    static AliasMap parse(std::istream& in);

    std::string resolve(const std::string& raw_name) const;
    std::size_t rule_count() const { return lookup_.size(); }

private:
    std::map<std::string, std::string> lookup_;
};

// Trim ASCII whitespace and upper-case ASCII letters; bytes outside ASCII are
// kept as-is. This is the one normalization applied to speaker names.
std::string normalize_name(const std::string& raw);

struct ScriptScene {
    int episode = 0;
    int scene = 0;                 // 1-based position within the episode
    std::vector<NodeId> speakers;  // first-appearance order, deduplicated

    bool operator==(const ScriptScene&) const = default;
};

struct ScriptParseOptions {
    std::string scene_marker = "[Scene:";
    int episode = 0;
};

struct ScriptParseResult {
    std::vector<ScriptScene> scenes;
    std::vector<std::string> warnings;  // skipped dialogue-like lines, with line numbers
};

// Line-oriented screenplay reader. A line starting with the scene marker
// (after leading whitespace) opens a new scene; `NAME: dialogue` lines add
// NAME to the current scene; lines opening with '(' or '[' are stage
// directions; anything before the first marker is preamble. Dialogue-like
// lines whose name part is implausible (empty, too long, odd characters) are
// skipped with a warning. Scenes that end with no speakers are dropped.
// Throws DataError when the input contains no scene marker at all.
ScriptParseResult parse_script(std::istream& in, const AliasMap& aliases,
                               const ScriptParseOptions& options = {});

// Co-occurrence aggregation: every unordered speaker pair of a scene gains
// +1 per shared scene; single-speaker scenes contribute their node only.
// Granularity::episode keys slices by the scenes' episode numbers;
// Granularity::season folds every scene into the single slice {0, 0}
// (script scenes carry no season attribution of their own).
std::map<TimeSlice, WeightedGraph> scenes_to_cooccurrence(
    const std::vector<ScriptScene>& scenes, Granularity granularity);

}  // namespace narranet
