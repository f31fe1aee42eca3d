#include "mpath/path_poset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace mpath {

int PathPoset::level(std::size_t id) const
{
    return std::popcount(masks_[id]);
}

std::size_t PathPoset::level_begin(int k) const
{
    if (k < 0 || k + 1 >= static_cast<int>(level_start_.size()))
        return masks_.size();
    return level_start_[static_cast<std::size_t>(k)];
}

std::size_t PathPoset::level_end(int k) const
{
    if (k < 0 || k + 1 >= static_cast<int>(level_start_.size()))
        return masks_.size();
    return level_start_[static_cast<std::size_t>(k) + 1];
}

std::pair<std::size_t, std::size_t> PathPoset::covers_from(std::size_t lower) const
{
    return {cover_start_[lower], cover_start_[lower + 1]};
}

long PathPoset::cover_id(std::size_t lower, int edge) const
{
    const auto [b, e] = covers_from(lower);
    for (std::size_t c = b; c < e; ++c)
        if (covers_[c].edge == edge)
            return static_cast<long>(c);
    return -1;
}

void PathPoset::finish()
{
    std::sort(masks_.begin(), masks_.end(), [](EdgeMask a, EdgeMask b) {
        const int la = std::popcount(a), lb = std::popcount(b);
        return la != lb ? la < lb : a < b;
    });
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
    index_.clear();
    index_.reserve(masks_.size());
    for (std::size_t i = 0; i < masks_.size(); ++i)
        index_.emplace(masks_[i], i);

    level_start_.clear();
    const int top = masks_.empty() ? -1 : std::popcount(masks_.back());
    for (int k = 0; k <= top + 1; ++k) {
        auto it = std::find_if(masks_.begin(), masks_.end(), [k](EdgeMask m) { return std::popcount(m) >= k; });
        level_start_.push_back(static_cast<std::size_t>(it - masks_.begin()));
    }

    covers_.clear();
    cover_start_.assign(masks_.size() + 1, 0);
    for (std::size_t i = 0; i < masks_.size(); ++i) {
        cover_start_[i] = covers_.size();
        for (int e = 0; e < edge_count_; ++e) {
            const EdgeMask bit = EdgeMask{1} << e;
            if (masks_[i] & bit)
                continue;
            auto it = index_.find(masks_[i] | bit);
            if (it != index_.end())
                covers_.push_back({i, it->second, e});
        }
    }
    cover_start_[masks_.size()] = covers_.size();
}

PathPoset PathPoset::from_masks(std::vector<EdgeMask> masks, int edge_count)
{
    PathPoset p;
    p.edge_count_ = edge_count;
    p.masks_ = std::move(masks);
    p.finish();
    return p;
}

PathPoset enumerate_path_poset(const Digraph& g, std::size_t cap)
{
    if (g.edge_count() > kMaxEdges)
        throw Error(ErrorKind::SizeLimitExceeded, "graphs with more than 64 edges are not supported");
    std::vector<EdgeMask> all{0};
    std::vector<EdgeMask> frontier{0};
    while (!frontier.empty()) {
        std::vector<EdgeMask> next;
        for (EdgeMask h : frontier) {
            for (int e = 0; e < g.edge_count(); ++e) {
                const EdgeMask bit = EdgeMask{1} << e;
                // Only extend by edges above the top bit to visit each set once.
                if ((h & bit) || (h >> e) != 0)
                    continue;
                if (is_multipath(g, h | bit))
                    next.push_back(h | bit);
            }
        }
        if (all.size() + next.size() > cap)
            throw Error(ErrorKind::SizeLimitExceeded,
                        "path poset exceeds the cap of " + std::to_string(cap) + " multipaths");
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return PathPoset::from_masks(std::move(all), g.edge_count());
}

std::vector<std::size_t> level_counts(const PathPoset& p)
{
    std::vector<std::size_t> out;
    for (int k = 0; k <= p.max_level(); ++k)
        out.push_back(p.level_end(k) - p.level_begin(k));
    return out;
}

PosetReport verify_poset_axioms(const PathPoset& p)
{
    PosetReport report;
    const int m = p.edge_count();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const EdgeMask h = p.mask(i);
        for (int e = 0; e < m; ++e) {
            const EdgeMask bit = EdgeMask{1} << e;
            if ((h & bit) && !p.contains(h & ~bit))
                report.downward_violations.push_back(mask_label(h, m) + " lacks " + mask_label(h & ~bit, m));
        }
        // Every interval of length two must contain exactly two middle elements.
        for (int e = 0; e < m; ++e) {
            for (int f = e + 1; f < m; ++f) {
                const EdgeMask be = EdgeMask{1} << e, bf = EdgeMask{1} << f;
                if ((h & be) || (h & bf) || !p.contains(h | be | bf))
                    continue;
                const int middles = static_cast<int>(p.contains(h | be)) + static_cast<int>(p.contains(h | bf));
                if (middles != 2)
                    report.square_violations.push_back("[" + mask_label(h, m) + ", " + mask_label(h | be | bf, m) +
                                                       "] has " + std::to_string(middles) + " middle element(s)");
            }
        }
    }
    return report;
}

std::string mask_label(EdgeMask mask, int edge_count)
{
    std::string out = "{";
    bool first = true;
    for (int e = 0; e < edge_count; ++e) {
        if (!((mask >> e) & 1U))
            continue;
        if (!first)
            out += ",";
        out += "e" + std::to_string(e);
        first = false;
    }
    return out + "}";
}

std::string hasse_export(const PathPoset& p)
{
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << "  m" << i << " [label=\"" << mask_label(p.mask(i), p.edge_count()) << "\"];\n";
    for (const Cover& c : p.covers())
        os << "  m" << c.lower << " -> m" << c.upper << " [label=\"e" << c.edge << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string flat_dump(const PathPoset& p)
{
    std::ostringstream os;
    for (int k = 0; k <= p.max_level(); ++k) {
        os << "# level " << k << "\n";
        for (std::size_t i = p.level_begin(k); i < p.level_end(k); ++i)
            os << p.mask(i) << "\n";
    }
    return os.str();
}

std::vector<std::vector<int>> component_partition(const Digraph& g, EdgeMask multipath)
{
    return components(g, multipath);
}

}  // namespace mpath
