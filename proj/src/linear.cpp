#include "mpath/linear.hpp"

#include <algorithm>

namespace mpath {

Digraph linear_from_word(const std::string& word)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int a = static_cast<int>(i), b = static_cast<int>(i) + 1;
        if (word[i] == 'R')
            edges.push_back({a, b});
        else if (word[i] == 'L')
            edges.push_back({b, a});
        else
            throw Error(ErrorKind::BadParameters, "orientation words use only R and L");
    }
    return Digraph(static_cast<int>(word.size()) + 1, std::move(edges));
}

std::string word_of(const Digraph& g)
{
    const int n = g.vertex_count();
    if (n == 0 || g.edge_count() != n - 1)
        throw Error(ErrorKind::NotLinear, "a linear graph on k+1 vertices has k edges");
    if (n == 1)
        return "";
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (g.valence(v) > 2 || g.valence(v) == 0)
            throw Error(ErrorKind::NotLinear, "vertex " + std::to_string(v) + " has valence " +
                                                  std::to_string(g.valence(v)));
        if (g.valence(v) == 1 && start < 0)
            start = v;
    }
    if (start < 0)
        throw Error(ErrorKind::NotLinear, "graph is a cycle");
    std::string word;
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    int at = start;
    for (int step = 0; step < g.edge_count(); ++step) {
        int next = -1;
        for (int i = 0; i < g.edge_count() && next < 0; ++i) {
            if (used[static_cast<std::size_t>(i)])
                continue;
            const Edge& e = g.edge(i);
            if (e.source == at) {
                word += 'R';
                next = e.target;
            } else if (e.target == at) {
                word += 'L';
                next = e.source;
            }
            if (next >= 0)
                used[static_cast<std::size_t>(i)] = 1;
        }
        if (next < 0)
            throw Error(ErrorKind::NotLinear, "graph is disconnected");
        at = next;
    }
    return word;
}

ReductionData analyze_word(const std::string& word)
{
    ReductionData d;
    d.word = word;
    const int n = static_cast<int>(word.size());
    // Position i is unstable iff the letters on both sides agree (a pass-through vertex).
    for (int i = 0; i <= n; ++i)
        if (i == 0 || i == n || word[static_cast<std::size_t>(i) - 1] != word[static_cast<std::size_t>(i)])
            d.stable_vertices.push_back(i);
    // Stable vertices are linked by a directed path only across a single coherent run.
    for (std::size_t s = 0; s + 1 < d.stable_vertices.size(); ++s)
        d.minimal_d = std::max(d.minimal_d, d.stable_vertices[s + 1] - d.stable_vertices[s]);

    // Keep the last edge of every run; cut the path at the removed edges.
    int run_start = 0;
    for (int i = 0; i < n; ++i) {
        const bool run_ends = i + 1 == n || word[static_cast<std::size_t>(i) + 1] != word[static_cast<std::size_t>(i)];
        if (!run_ends)
            continue;
        for (int j = run_start; j < i; ++j)
            d.deleted_edges.push_back(j);
        run_start = i + 1;
    }
    int piece = 0;
    for (int i = 0; i < n; ++i) {
        if (std::binary_search(d.deleted_edges.begin(), d.deleted_edges.end(), i)) {
            d.components.push_back(piece);
            piece = 0;
        } else {
            ++piece;
        }
    }
    d.components.push_back(piece);
    return d;
}

ReductionData analyze(const Digraph& g)
{
    return analyze_word(word_of(g));
}

BettiTable alternating_table(int n)
{
    for (int k = 0; k <= n + 1; ++k) {
        if (n == 3 * (k - 1) + 2 || n == 3 * k) {
            std::vector<std::size_t> betti(static_cast<std::size_t>(k) + 1, 0);
            betti[static_cast<std::size_t>(k)] = 1;
            return make_table(std::move(betti));
        }
    }
    return make_table({});
}

BettiTable closed_form_word(const std::string& word)
{
    const ReductionData d = analyze_word(word);
    if (d.minimal_d > 2)
        return make_table({});
    if (d.minimal_d <= 1)
        return alternating_table(static_cast<int>(word.size()));
    const std::size_t h = d.components.size();
    for (std::size_t j = 0; j + 1 < h; ++j)
        if (d.components[j] % 3 == 0)
            return make_table({});
    if (d.components.back() % 3 == 1)
        return make_table({});
    BettiTable table = alternating_table(d.components.back());
    for (std::size_t j = 0; j + 1 < h; ++j)
        table = convolve(table, alternating_table(3 * (d.components[j] / 3)));
    return shift(table, static_cast<int>(h) - 1);
}

BettiTable closed_form_betti(const Digraph& g)
{
    return closed_form_word(word_of(g));
}

RecursionReport recursion_check_alternating(int max_n, const FieldSpec& f)
{
    if (max_n < 2)
        throw Error(ErrorKind::BadParameters, "recursion check needs max_n >= 2");
    RecursionReport report;
    std::vector<BettiTable> direct;
    for (int n = 0; n <= max_n; ++n)
        direct.push_back(cohomology(family({FamilyKind::Alternating, {n}}), f));
    for (int n = 2; n <= max_n; ++n) {
        BettiTable expected;
        switch (n % 3) {
        case 0: expected = direct[static_cast<std::size_t>(n) - 1]; break;
        case 1: expected = make_table({}); break;
        default: expected = shift(direct[static_cast<std::size_t>(n) - 2], 1); break;
        }
        if (!(direct[static_cast<std::size_t>(n)] == expected))
            report.mismatches.push_back("A_" + std::to_string(n) + " breaks the mod-3 recursion");
    }
    return report;
}

std::vector<std::string> all_words(int length)
{
    std::vector<std::string> out;
    for (unsigned bits = 0; bits < (1U << length); ++bits) {
        std::string w;
        for (int i = 0; i < length; ++i)
            w += ((bits >> i) & 1U) ? 'L' : 'R';
        out.push_back(w);
    }
    return out;
}

}  // namespace mpath
