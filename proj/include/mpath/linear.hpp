#pragma once

#include <string>
#include <vector>

#include "mpath/cohomology.hpp"

namespace mpath {

// Letters over {R, L}: R at position i is the edge (v_i, v_{i+1}), L is (v_{i+1}, v_i).
Digraph linear_from_word(const std::string& word);

// Recovers the word of a linear graph, read from its lower-index endpoint. Throws NotLinear.
std::string word_of(const Digraph& g);

struct ReductionData {
    std::string word;
    std::vector<int> stable_vertices;  // positions along the path
    int minimal_d = 0;                 // smallest k with property D(k)
    std::vector<int> components;       // k_1..k_h, isolated vertices give 0
    std::vector<int> deleted_edges;    // word positions removed by the reduction
};

ReductionData analyze(const Digraph& g);
ReductionData analyze_word(const std::string& word);

BettiTable closed_form_betti(const Digraph& g);
BettiTable closed_form_word(const std::string& word);

// The alternating table: dimension 1 in degree k iff n = 3(k-1)+2 or n = 3k.
BettiTable alternating_table(int n);

struct RecursionReport {
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

RecursionReport recursion_check_alternating(int max_n, const FieldSpec& f = FieldSpec::rationals());

std::vector<std::string> all_words(int length);

}  // namespace mpath
