#include "mpath/multipath_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mpath {

std::vector<std::vector<std::vector<int>>> SimplicialComplex::simplices_by_size() const
{
    std::set<std::vector<int>> all{{}};
    for (const auto& facet : facets) {
        const std::size_t k = facet.size();
        if (k >= 63)
            throw Error(ErrorKind::SizeLimitExceeded, "facet too large to close");
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
            std::vector<int> face;
            for (std::size_t i = 0; i < k; ++i)
                if ((bits >> i) & 1U)
                    face.push_back(facet[i]);
            all.insert(std::move(face));
        }
    }
    std::size_t top = 0;
    for (const auto& s : all)
        top = std::max(top, s.size());
    std::vector<std::vector<std::vector<int>>> out(top + 1);
    for (const auto& s : all)
        out[s.size()].push_back(s);
    return out;
}

std::size_t SimplicialComplex::simplex_count() const
{
    std::size_t n = 0;
    for (const auto& level : simplices_by_size())
        n += level.size();
    return n;
}

SimplicialComplex build_multipath_complex(const Digraph& g, std::size_t cap)
{
    const PathPoset p = enumerate_path_poset(g, cap);
    SimplicialComplex x;
    for (int e = 0; e < g.edge_count(); ++e)
        x.vertex_labels.push_back("e" + std::to_string(e));
    for (std::size_t id = 0; id < p.size(); ++id) {
        const auto [b, e] = p.covers_from(id);
        if (b != e || p.mask(id) == 0)
            continue;
        std::vector<int> facet;
        for (int i = 0; i < g.edge_count(); ++i)
            if ((p.mask(id) >> i) & 1U)
                facet.push_back(i);
        x.facets.push_back(std::move(facet));
    }
    std::sort(x.facets.begin(), x.facets.end());
    return x;
}

ReducedBetti reduced_simplicial_betti(const SimplicialComplex& x, const FieldSpec& f)
{
    const auto by_size = x.simplices_by_size();
    std::vector<std::map<std::vector<int>, std::size_t>> index(by_size.size());
    for (std::size_t s = 0; s < by_size.size(); ++s)
        for (std::size_t i = 0; i < by_size[s].size(); ++i)
            index[s].emplace(by_size[s][i], i);

    // Coboundary from size-s simplices to size-(s+1): dropping the i-th vertex of tau gives sign (-1)^i.
    std::vector<std::size_t> ranks;
    for (std::size_t s = 0; s + 1 < by_size.size(); ++s) {
        SparseMatrix delta(by_size[s + 1].size(), by_size[s].size());
        for (std::size_t row = 0; row < by_size[s + 1].size(); ++row) {
            const auto& tau = by_size[s + 1][row];
            for (std::size_t i = 0; i < tau.size(); ++i) {
                std::vector<int> face = tau;
                face.erase(face.begin() + static_cast<long>(i));
                delta.add(row, index[s].at(face), i % 2 == 0 ? 1 : -1);
            }
        }
        delta.compress();
        ranks.push_back(rank(delta, f));
    }
    ReducedBetti out;
    for (std::size_t s = 0; s < by_size.size(); ++s) {
        const std::size_t out_rank = s < ranks.size() ? ranks[s] : 0;
        const std::size_t in_rank = s > 0 ? ranks[s - 1] : 0;
        out.betti.push_back(by_size[s].size() - out_rank - in_rank);
    }
    return out;
}

ShiftReport verify_shift_isomorphism(const Digraph& g, const FieldSpec& f, std::size_t cap)
{
    ShiftReport report;
    report.multipath = cohomology(g, f, cap);
    report.simplicial = reduced_simplicial_betti(build_multipath_complex(g, cap), f);
    const std::size_t top = std::max(report.multipath.betti.size(), report.simplicial.betti.size());
    for (std::size_t n = 0; n < top; ++n) {
        const std::size_t mu = report.multipath.at(n);
        const std::size_t sim = report.simplicial.in_dimension(static_cast<int>(n) - 1);
        if (mu != sim)
            report.mismatches.push_back("degree " + std::to_string(n) + ": multipath " + std::to_string(mu) +
                                        ", simplicial " + std::to_string(sim));
    }
    return report;
}

std::string export_complex(const SimplicialComplex& x)
{
    std::ostringstream os;
    for (const auto& facet : x.facets) {
        for (std::size_t i = 0; i < facet.size(); ++i)
            os << (i ? " " : "") << x.vertex_labels[static_cast<std::size_t>(facet[i])];
        os << "\n";
    }
    return os.str();
}

}  // namespace mpath
