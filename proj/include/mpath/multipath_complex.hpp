#pragma once

#include <string>
#include <vector>

#include "mpath/cohomology.hpp"

namespace mpath {

// Abstract simplicial complex on vertices 0..vertex_count-1 given by its facets.
struct SimplicialComplex {
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<int>> facets;  // each sorted; list sorted

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    // Closure of the facets, the empty simplex included, grouped by size.
    std::vector<std::vector<std::vector<int>>> simplices_by_size() const;
    std::size_t simplex_count() const;
};

// Vertices are the edges of g; simplices are the multipaths.
SimplicialComplex build_multipath_complex(const Digraph& g, std::size_t cap = kDefaultSizeCap);

struct ReducedBetti {
    // betti[i] is the reduced Betti number in dimension i - 1, so betti[0] is degree -1.
    std::vector<std::size_t> betti;
    std::size_t in_dimension(int dim) const
    {
        const int i = dim + 1;
        return (i < 0 || i >= static_cast<int>(betti.size())) ? 0 : betti[static_cast<std::size_t>(i)];
    }
};

ReducedBetti reduced_simplicial_betti(const SimplicialComplex& x, const FieldSpec& f = FieldSpec::rationals());

struct ShiftReport {
    BettiTable multipath;
    ReducedBetti simplicial;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

ShiftReport verify_shift_isomorphism(const Digraph& g, const FieldSpec& f = FieldSpec::rationals(),
                                     std::size_t cap = kDefaultSizeCap);

std::string export_complex(const SimplicialComplex& x);

}  // namespace mpath
