#include "dyckt/json_io.hpp"

namespace dyckt {

json to_json(const Partition& p)
{
    return json(p.parts());
}

Partition partition_from_json(const json& j)
{
    return Partition(j.get<std::vector<int>>());
}

json to_json(const Tiling& t)
{
    json tiles = json::array();
    for (const Tile& tile : t.tiles()) {
        json path = json::array();
        for (Node n : tile.path)
            path.push_back({n.a, n.b});
        tiles.push_back(path);
    }
    return json{{"outer", to_json(t.shape().outer())},
                {"inner", to_json(t.shape().inner())},
                {"tiles", tiles}};
}

Tiling tiling_from_json(const json& j)
{
    SkewShape shape(partition_from_json(j.at("outer")), partition_from_json(j.at("inner")));
    std::vector<Tile> tiles;
    for (const json& path : j.at("tiles")) {
        Tile t;
        for (const json& n : path)
            t.path.push_back({n.at(0).get<int>(), n.at(1).get<int>()});
        tiles.push_back(std::move(t));
    }
    return Tiling(std::move(shape), std::move(tiles));
}

namespace {

json labels_json(const std::vector<Partition>& labels)
{
    json out = json::array();
    for (const Partition& p : labels)
        out.push_back(p.str());
    return out;
}

std::string csv_quote(const std::string& s)
{
    return "\"" + s + "\"";
}

}  // namespace

json to_json(const IntMatrix& m)
{
    return json{{"labels", labels_json(m.labels)}, {"entries", m.entries}};
}

json to_json(const PolyMatrix& m)
{
    json rows = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const QPoly& p : row)
            r.push_back(p.c);
        rows.push_back(r);
    }
    return json{{"labels", labels_json(m.labels)}, {"entries", rows}};
}

std::string to_csv(const IntMatrix& m)
{
    std::string out;
    for (const Partition& p : m.labels)
        out += "," + csv_quote(p.str());
    out += "\n";
    for (int r = 0; r < m.dim(); ++r) {
        out += csv_quote(m.labels[r].str());
        for (int c = 0; c < m.dim(); ++c)
            out += "," + std::to_string(m.entries[r][c]);
        out += "\n";
    }
    return out;
}

std::string to_csv(const PolyMatrix& m)
{
    std::string out;
    for (const Partition& p : m.labels)
        out += "," + csv_quote(p.str());
    out += "\n";
    for (int r = 0; r < m.dim(); ++r) {
        out += csv_quote(m.labels[r].str());
        for (int c = 0; c < m.dim(); ++c)
            out += "," + csv_quote(m.entries[r][c].str());
        out += "\n";
    }
    return out;
}

namespace {

json tableau_json(const Tableau& t)
{
    return json(t.rows);
}

}  // namespace

json garnir_to_json(const Partition& pi, Node node, int e, int kappa,
                    const std::vector<GarnirTerm>& terms)
{
    json jterms = json::array();
    for (const GarnirTerm& t : terms)
        jterms.push_back({{"coeff", t.coeff},
                          {"lambda", to_json(t.lambda)},
                          {"tableau", tableau_json(t.tableau)},
                          {"psi_word", t.word.letters}});
    return json{{"pi", to_json(pi)},
                {"node", {node.a, node.b}},
                {"e", e},
                {"kappa", kappa},
                {"terms", jterms}};
}

json classical_to_json(const Partition& pi, Node node, int e, int kappa,
                       const std::vector<ClassicalTerm>& terms,
                       const PsiWord& row_word)
{
    json jterms = json::array();
    for (const ClassicalTerm& t : terms)
        jterms.push_back({{"coeff", 1},
                          {"lambda", to_json(t.lambda)},
                          {"tau_word", t.coset_letters}});
    return json{{"pi", to_json(pi)},
                {"node", {node.a, node.b}},
                {"e", e},
                {"kappa", kappa},
                {"psi_row_word", row_word.letters},
                {"terms", jterms}};
}

json to_json(const Report& r)
{
    json checks = json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"pass", r.pass()}, {"checks", checks}};
}

}  // namespace dyckt
