#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpath/cohomology.hpp"

namespace mpath {

enum class BundleKind { TargetBundle, SourceBundle };

// Pieces are base + one bundle edge, appended last. base keeps every vertex.
struct Decomposition {
    int vertex = 0;
    BundleKind kind = BundleKind::TargetBundle;
    Digraph base;
    std::vector<Digraph> pieces;
    std::vector<int> bundle_edges;
    bool partition_ok = false;
    std::vector<std::string> partition_issues;
};

// Prefers the incoming bundle when both sides qualify. Throws NotDecomposable.
Decomposition decompose_at_vertex(const Digraph& g, int v, std::size_t cap = kDefaultSizeCap);
Decomposition decompose_at_vertex(const Digraph& g, int v, BundleKind kind, std::size_t cap = kDefaultSizeCap);

// An edge (a,b) with every other edge at a entering a, every other edge at b
// leaving b, and no coherent cycle through it. The lowest such index is returned.
std::optional<int> detect_cone_edge(const Digraph& g);

// P(g) = P(g - e) + {H + e}: checks the bijection H -> H + e edge-set by edge-set.
bool verify_cone(const Digraph& g, int edge, std::size_t cap = kDefaultSizeCap);

enum class Verdict { ProvedAcyclic, Inconclusive };

struct TraceStep {
    int depth = 0;
    std::string criterion;
    std::string detail;
};

struct AcyclicityReport {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<TraceStep> trace;
};

AcyclicityReport acyclicity_report(const Digraph& g, int depth_cap = 16);

std::string report_text(const AcyclicityReport& r);
std::string report_json(const AcyclicityReport& r);

enum class MvStatus { Ok, PosetMismatch, IdentityFailure };

struct MayerVietorisReport {
    MvStatus status = MvStatus::Ok;
    Digraph glued;
    BettiTable glued_betti, left_betti, right_betti, common_betti;
    std::vector<std::string> issues;
};

MayerVietorisReport mayer_vietoris_check(const Digraph& g1, const Digraph& g2, const Digraph& common,
                                         const GluingMap& map, const FieldSpec& f = FieldSpec::rationals());

// Throws NotUnivalent unless w has exactly one incident edge.
Digraph suspend(const Digraph& g, int w);

Digraph wedge_family(int k, int n);

}  // namespace mpath
