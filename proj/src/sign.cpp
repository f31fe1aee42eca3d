#include "mpath/sign.hpp"

#include <bit>
#include <numeric>

namespace mpath {

SignAssignment canonical_sign(const PathPoset& p, const Digraph& g)
{
    (void)g;
    SignAssignment s;
    s.signs.reserve(p.covers().size());
    for (const Cover& c : p.covers()) {
        const EdgeMask below = (EdgeMask{1} << c.edge) - 1;
        s.signs.push_back(static_cast<std::uint8_t>(std::popcount(p.mask(c.lower) & below) & 1));
    }
    return s;
}

SignAssignment ranked_sign(const PathPoset& p, const std::vector<int>& rank)
{
    SignAssignment s;
    s.signs.reserve(p.covers().size());
    for (const Cover& c : p.covers()) {
        int count = 0;
        const EdgeMask h = p.mask(c.lower);
        for (int e = 0; e < p.edge_count(); ++e)
            if (((h >> e) & 1U) && rank[static_cast<std::size_t>(e)] < rank[static_cast<std::size_t>(c.edge)])
                ++count;
        s.signs.push_back(static_cast<std::uint8_t>(count & 1));
    }
    return s;
}

SignReport verify_sign(const PathPoset& p, const SignAssignment& s)
{
    if (s.signs.size() != p.covers().size())
        throw Error(ErrorKind::MissingCover, "assignment has " + std::to_string(s.signs.size()) + " labels for " +
                                                 std::to_string(p.covers().size()) + " covers");
    SignReport report;
    const int m = p.edge_count();
    for (std::size_t x = 0; x < p.size(); ++x) {
        const EdgeMask h = p.mask(x);
        for (int e = 0; e < m; ++e) {
            for (int f = e + 1; f < m; ++f) {
                const EdgeMask be = EdgeMask{1} << e, bf = EdgeMask{1} << f;
                if ((h & be) || (h & bf) || !p.contains(h | be | bf) || !p.contains(h | be) || !p.contains(h | bf))
                    continue;
                const std::size_t y = p.id_of(h | be), y2 = p.id_of(h | bf);
                const long c1 = p.cover_id(x, e), c2 = p.cover_id(y, f);
                const long c3 = p.cover_id(x, f), c4 = p.cover_id(y2, e);
                const int lhs = s.signs[static_cast<std::size_t>(c1)] + s.signs[static_cast<std::size_t>(c2)];
                const int rhs = s.signs[static_cast<std::size_t>(c3)] + s.signs[static_cast<std::size_t>(c4)] + 1;
                if ((lhs - rhs) % 2 != 0)
                    report.violations.push_back("square " + mask_label(h, m) + " -> " + mask_label(h | be | bf, m));
            }
        }
    }
    return report;
}

}  // namespace mpath
