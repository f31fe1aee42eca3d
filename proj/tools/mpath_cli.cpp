// Command-line front end for multipath cohomology.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mpath/algebra.hpp"
#include "mpath/cohomology.hpp"
#include "mpath/io.hpp"
#include "mpath/linear.hpp"
#include "mpath/multipath_complex.hpp"
#include "mpath/structure.hpp"
#include "mpath/suites.hpp"

using namespace mpath;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;

struct InputOptions {
    std::string graph_file;
    std::string family_spec;
    std::string word;
    bool word_given = false;
};

void add_input(CLI::App* cmd, InputOptions& in)
{
    auto* g = cmd->add_option("--graph", in.graph_file, "graph file (JSON)");
    auto* f = cmd->add_option("--family", in.family_spec, "family spec, e.g. dandelion:3,2");
    auto* w = cmd->add_option("--word", in.word, "orientation word over R and L");
    g->excludes(f)->excludes(w);
    f->excludes(w);
}

Digraph load_input(const InputOptions& in, bool word_given)
{
    const int given = !in.graph_file.empty() + !in.family_spec.empty() + word_given;
    if (given != 1)
        throw Error(ErrorKind::BadParameters, "give exactly one of --graph, --family, --word");
    if (!in.graph_file.empty())
        return parse_graph_file(in.graph_file);
    if (!in.family_spec.empty())
        return family(parse_family(in.family_spec));
    return linear_from_word(in.word);
}

FieldSpec parse_field(const std::string& s)
{
    if (s == "Q" || s == "q" || s == "rationals")
        return FieldSpec::rationals();
    try {
        std::size_t used = 0;
        const unsigned long p = std::stoul(s, &used);
        if (used == s.size())
            return FieldSpec::prime(p);
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::BadParameters, "field must be Q or a prime, got '" + s + "'");
}

std::size_t size_cap(std::optional<std::size_t> flag)
{
    if (flag)
        return *flag;
    if (const char* env = std::getenv("MPATH_SIZE_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadParameters, "MPATH_SIZE_CAP must be a positive integer");
        }
    }
    return kDefaultSizeCap;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multipath cohomology of directed graphs"};
    app.require_subcommand(1);

    InputOptions in;
    std::string field = "Q", algebra, format = "text";
    std::optional<std::size_t> cap;
    bool cross_check = false;

    auto* coh = app.add_subcommand("cohomology", "Betti table of a graph");
    add_input(coh, in);
    coh->add_option("--field", field, "Q or a prime p");
    coh->add_option("--algebra", algebra, "coefficient algebra: dual-numbers[:deg], diagonal:r, field or a file");
    coh->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    coh->add_flag("--cross-check", cross_check, "compare Q against F_2, F_3, F_101");
    coh->add_option("--cap", cap, "maximum number of multipaths");

    auto* pos = app.add_subcommand("poset", "Hasse diagram and level counts");
    add_input(pos, in);
    pos->add_option("--format", format, "dot or flat")->check(CLI::IsMember({"text", "dot", "flat"}));
    pos->add_option("--cap", cap, "maximum number of multipaths");

    auto* simp = app.add_subcommand("simplicial", "facets of the multipath complex and the shift check");
    add_input(simp, in);
    simp->add_option("--field", field, "Q or a prime p");
    simp->add_option("--cap", cap, "maximum number of multipaths");

    auto* eul = app.add_subcommand("euler", "graded Euler characteristic");
    add_input(eul, in);
    algebra = "";
    eul->add_option("--algebra", algebra, "graded coefficient algebra (default dual-numbers)");
    eul->add_option("--cap", cap, "maximum number of multipaths");

    auto* acy = app.add_subcommand("acyclic", "structural acyclicity proof search");
    add_input(acy, in);
    acy->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string suite;
    SuiteOptions suite_options;
    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    ver->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    ver->add_option("--max", suite_options.max, "suite size bound");
    ver->add_option("--count", suite_options.count, "number of random instances");
    ver->add_option("--seed", suite_options.seed, "random seed");

    std::string family_spec;
    auto* fam = app.add_subcommand("family", "print a family graph");
    fam->add_option("spec", family_spec, "family spec, e.g. polygon:3")->required();
    fam->add_option("--format", format, "json or dot")->check(CLI::IsMember({"text", "json", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }
    for (auto* cmd : {coh, pos, simp, eul, acy})
        if (cmd->parsed() && cmd->count("--word"))
            in.word_given = true;

    try {
        if (coh->parsed()) {
            const Digraph g = load_input(in, in.word_given);
            const std::size_t limit = size_cap(cap);
            BettiTable t;
            if (!algebra.empty())
                t = algebra_betti(g, algebra_by_name(algebra), limit);
            else if (cross_check) {
                const CrossCheck cc = cross_checked_cohomology(g, {2, 3, 101}, limit);
                t = cc.rational;
                if (cc.torsion_warning)
                    std::cerr << "warning: ranks over Q and F_p disagree (torsion present)\n";
            } else {
                t = cohomology(g, parse_field(field), limit);
            }
            std::cout << (format == "csv" ? betti_csv(t) : betti_text(t));
        } else if (pos->parsed()) {
            const PathPoset p = enumerate_path_poset(load_input(in, in.word_given), size_cap(cap));
            std::string counts;
            for (std::size_t c : level_counts(p))
                counts += " " + std::to_string(c);
            if (format == "flat")
                std::cout << "# level counts:" << counts << "\n" << flat_dump(p);
            else
                std::cout << "// level counts:" << counts << "\n" << hasse_export(p);
        } else if (simp->parsed()) {
            const Digraph g = load_input(in, in.word_given);
            const std::size_t limit = size_cap(cap);
            std::cout << export_complex(build_multipath_complex(g, limit));
            const ShiftReport r = verify_shift_isomorphism(g, parse_field(field), limit);
            std::cout << "# shift isomorphism: " << (r.ok() ? "holds" : "FAILS") << "\n";
            for (const auto& m : r.mismatches)
                std::cout << "# " << m << "\n";
            if (!r.ok())
                return kExitMismatch;
        } else if (eul->parsed()) {
            const Digraph g = load_input(in, in.word_given);
            const GradedEuler e = graded_euler(g, algebra_by_name(algebra.empty() ? "dual-numbers" : algebra),
                                               size_cap(cap));
            std::cout << "q:     " << e.in_q.to_string("q") << "\n";
            std::cout << "alpha: " << e.in_alpha.factored("a") << "\n";
        } else if (acy->parsed()) {
            const AcyclicityReport r = acyclicity_report(load_input(in, in.word_given));
            std::cout << (format == "json" ? report_json(r) + "\n" : report_text(r));
        } else if (ver->parsed()) {
            const SuiteResult r = run_suite(suite, suite_options);
            for (const auto& line : r.lines)
                std::cout << line << "\n";
            std::cout << suite << ": " << (r.passed ? "passed" : "FAILED") << "\n";
            return r.passed ? 0 : kExitMismatch;
        } else if (fam->parsed()) {
            const Digraph g = family(parse_family(family_spec));
            std::cout << (format == "dot" ? graph_to_dot(g) : graph_to_json(g));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::SizeLimitExceeded ? kExitCap : kExitInvalid;
    }
    return 0;
}
