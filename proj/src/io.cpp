#include "mpath/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace mpath {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

int as_int(const json& j, const std::string& field)
{
    if (!j.is_number_integer())
        throw Error(ErrorKind::ParseError, "field '" + field + "' must be an integer");
    return j.get<int>();
}

mpq_class as_rational(const json& j, const std::string& field)
{
    try {
        if (j.is_number_integer())
            return mpq_class(j.get<long>());
        if (j.is_string()) {
            mpq_class q(j.get<std::string>());
            q.canonicalize();
            return q;
        }
    } catch (const std::invalid_argument&) {
    }
    throw Error(ErrorKind::ParseError, "field '" + field + "' must hold integers or rational strings");
}

}  // namespace

Digraph parse_graph_text(const std::string& text)
{
    const json j = parse_json(text);
    if (!j.is_object())
        throw Error(ErrorKind::ParseError, "graph document must be an object");
    if (!j.contains("vertices"))
        throw Error(ErrorKind::ParseError, "missing field 'vertices'");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw Error(ErrorKind::ParseError, "field 'edges' must be an array");
    const int n = as_int(j["vertices"], "vertices");
    GraphMode mode = GraphMode::Simple;
    if (j.contains("mode")) {
        const std::string m = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
        if (m == "multigraph")
            mode = GraphMode::Multigraph;
        else if (m != "simple")
            throw Error(ErrorKind::ParseError, "field 'mode' must be \"simple\" or \"multigraph\"");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const json& e = j["edges"][i];
        const std::string field = "edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2)
            throw Error(ErrorKind::ParseError, "field '" + field + "' must be a pair");
        edges.push_back({as_int(e[0], field), as_int(e[1], field)});
    }
    return Digraph(n, std::move(edges), mode);
}

Digraph parse_graph_file(const std::string& path)
{
    return parse_graph_text(read_file(path));
}

std::string graph_to_json(const Digraph& g)
{
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = json::array();
    for (const Edge& e : g.edges())
        j["edges"].push_back({e.source, e.target});
    j["mode"] = g.mode() == GraphMode::Simple ? "simple" : "multigraph";
    return j.dump() + "\n";
}

std::string graph_to_dot(const Digraph& g)
{
    std::ostringstream os;
    os << "digraph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  v" << v << ";\n";
    for (int i = 0; i < g.edge_count(); ++i)
        os << "  v" << g.edge(i).source << " -> v" << g.edge(i).target << " [label=\"e" << i
           << "\", arrowhead=normal];\n";
    os << "}\n";
    return os.str();
}

Algebra parse_algebra_text(const std::string& text)
{
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("rank") || !j.contains("table") || !j.contains("unit"))
        throw Error(ErrorKind::ParseError, "algebra document needs 'rank', 'table' and 'unit'");
    Algebra a;
    a.rank = as_int(j["rank"], "rank");
    if (!j["table"].is_array() || !j["unit"].is_array())
        throw Error(ErrorKind::ParseError, "'table' and 'unit' must be arrays");
    for (std::size_t i = 0; i < j["table"].size(); ++i)
        a.table.push_back(as_rational(j["table"][i], "table[" + std::to_string(i) + "]"));
    for (std::size_t i = 0; i < j["unit"].size(); ++i)
        a.unit.push_back(as_rational(j["unit"][i], "unit[" + std::to_string(i) + "]"));
    if (j.contains("degrees")) {
        std::vector<int> d;
        for (std::size_t i = 0; i < j["degrees"].size(); ++i)
            d.push_back(as_int(j["degrees"][i], "degrees[" + std::to_string(i) + "]"));
        a.degrees = d;
    }
    validate_algebra(a);
    return a;
}

Algebra parse_algebra_file(const std::string& path)
{
    return parse_algebra_text(read_file(path));
}

namespace {

std::vector<int> parse_params(const std::string& text)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadParameters, "'" + item + "' is not an integer");
        }
    }
    return out;
}

}  // namespace

Algebra algebra_by_name(const std::string& name)
{
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    const std::vector<int> params = colon == std::string::npos ? std::vector<int>{} : parse_params(name.substr(colon + 1));
    if (head == "field")
        return field_algebra();
    if (head == "dual-numbers")
        return dual_numbers(params.empty() ? 1 : params[0]);
    if (head == "diagonal")
        return diagonal_algebra(params.empty() ? 2 : params[0]);
    if (std::filesystem::exists(name))
        return parse_algebra_file(name);
    throw Error(ErrorKind::BadParameters, "unknown algebra '" + name + "'");
}

GraphFamily parse_family(const std::string& spec)
{
    static const std::map<std::string, FamilyKind> kinds = {
        {"linear", FamilyKind::Linear},           {"polygon", FamilyKind::Polygon},
        {"alternating", FamilyKind::Alternating}, {"dandelion", FamilyKind::Dandelion},
        {"hgraph", FamilyKind::HGraph},           {"sink", FamilyKind::SinkStar},
        {"source", FamilyKind::SourceStar},       {"wedge", FamilyKind::WedgeFamily},
        {"ladder", FamilyKind::Ladder},           {"diagsquare", FamilyKind::DiagonalSquare},
    };
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    auto it = kinds.find(name);
    if (it == kinds.end())
        throw Error(ErrorKind::BadParameters, "unknown family '" + name + "'");
    return {it->second, colon == std::string::npos ? std::vector<int>{} : parse_params(spec.substr(colon + 1))};
}

}  // namespace mpath
