#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "mpath/digraph.hpp"

namespace mpath {

inline constexpr std::size_t kDefaultSizeCap = std::size_t{1} << 24;

struct Cover {
    std::size_t lower = 0;
    std::size_t upper = 0;
    int edge = 0;
};

// Multipaths are stored as edge masks sorted by (level, mask). Covers are
// sorted by (lower, edge).
class PathPoset {
public:
    PathPoset() = default;

    // Builds covers for an arbitrary family of edge sets; no closure is assumed.
    static PathPoset from_masks(std::vector<EdgeMask> masks, int edge_count);

    std::size_t size() const { return masks_.size(); }
    int edge_count() const { return edge_count_; }
    EdgeMask mask(std::size_t id) const { return masks_[id]; }
    const std::vector<EdgeMask>& masks() const { return masks_; }
    int level(std::size_t id) const;
    int max_level() const { return static_cast<int>(level_start_.size()) - 2; }

    // Ids of level k are [level_begin(k), level_end(k)).
    std::size_t level_begin(int k) const;
    std::size_t level_end(int k) const;

    const std::vector<Cover>& covers() const { return covers_; }
    // Covers with the given lower element, as a range into covers().
    std::pair<std::size_t, std::size_t> covers_from(std::size_t lower) const;

    bool contains(EdgeMask m) const { return index_.count(m) != 0; }
    std::size_t id_of(EdgeMask m) const { return index_.at(m); }
    // Cover id for lower -> lower + edge, or -1.
    long cover_id(std::size_t lower, int edge) const;

private:
    void finish();

    int edge_count_ = 0;
    std::vector<EdgeMask> masks_;
    std::vector<std::size_t> level_start_;
    std::vector<Cover> covers_;
    std::vector<std::size_t> cover_start_;
    std::unordered_map<EdgeMask, std::size_t> index_;
};

PathPoset enumerate_path_poset(const Digraph& g, std::size_t cap = kDefaultSizeCap);

std::vector<std::size_t> level_counts(const PathPoset& p);

struct PosetReport {
    std::vector<std::string> downward_violations;
    std::vector<std::string> square_violations;
    bool ok() const { return downward_violations.empty() && square_violations.empty(); }
};

PosetReport verify_poset_axioms(const PathPoset& p);

std::string mask_label(EdgeMask m, int edge_count);
std::string hasse_export(const PathPoset& p);
std::string flat_dump(const PathPoset& p);

// Components of the multipath as vertex sets ordered by minimal vertex.
std::vector<std::vector<int>> component_partition(const Digraph& g, EdgeMask multipath);

}  // namespace mpath
