#include "necklace/json_io.hpp"

#include <filesystem>
#include <fstream>

#include "necklace/errors.hpp"

namespace necklace {

using nlohmann::json;

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ConfigError("quiver JSON needs 'vertices' and 'edges'");
    std::vector<std::string> vs;
    for (const auto& v : j.at("vertices"))
        vs.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::vector<Edge> edges;
    Quiver tmp(vs, {});
    for (const auto& e : j.at("edges")) {
        std::string from = e.at("from").is_string() ? e.at("from").get<std::string>() : e.at("from").dump();
        std::string to = e.at("to").is_string() ? e.at("to").get<std::string>() : e.at("to").dump();
        auto t = tmp.find_vertex(from), h = tmp.find_vertex(to);
        if (!t || !h) throw ConfigError("edge endpoint names an unknown vertex");
        edges.push_back(::necklace::Edge{e.at("name").get<std::string>(), *t, *h});
    }
    return Quiver(vs, edges);
}

json quiver_to_json(const Quiver& q) {
    json j;
    j["vertices"] = json::array();
    for (int v = 0; v < q.num_vertices(); ++v) j["vertices"].push_back(q.vertex_name(v));
    j["edges"] = json::array();
    for (int e = 0; e < q.num_edges(); ++e)
        j["edges"].push_back({{"name", q.edge_name(e)},
                              {"from", q.vertex_name(q.tail(e))},
                              {"to", q.vertex_name(q.head(e))}});
    return j;
}

json doubled_to_json(const DoubledQuiver& q) {
    json j;
    j["vertices"] = json::array();
    for (int v = 0; v < q.num_vertices(); ++v) j["vertices"].push_back(q.vertex_name(v));
    j["edges"] = json::array();
    for (int e = 0; e < q.num_edges(); ++e)
        j["edges"].push_back({{"name", q.edge_name(e)},
                              {"from", q.vertex_name(q.tail(e))},
                              {"to", q.vertex_name(q.head(e))},
                              {"eps", q.eps(e)}});
    return j;
}

Quiver load_quiver(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw ConfigError("cannot open quiver file: " + arg);
        json j;
        in >> j;
        return quiver_from_json(j);
    }
    auto num_suffix = [&](const std::string& prefix) -> int {
        if (arg.rfind(prefix, 0) != 0) return -1;
        try {
            return std::stoi(arg.substr(prefix.size()));
        } catch (...) {
            return -1;
        }
    };
    if (arg == "jordan") return loop_quiver(1);
    if (int n = num_suffix("loops-"); n > 0) return loop_quiver(n);
    if (int n = num_suffix("a"); n > 0) return line_quiver(n);
    if (int n = num_suffix("star-"); n > 0) return star_quiver(n);
    if (int n = num_suffix("kronecker-"); n > 0) return kronecker_quiver(n);
    throw ConfigError("no such quiver file or builtin spec: " + arg);
}

DimVector dims_from_json(const json& j, const Quiver& q) {
    DimVector d(q.num_vertices(), 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto v = q.find_vertex(it.key());
        if (!v) throw ConfigError("unknown vertex in dimension vector: " + it.key());
        d[*v] = it.value().get<long>();
    }
    return d;
}

DimVector parse_dims(const std::string& text, const Quiver& q) {
    DimVector d(q.num_vertices(), 0);
    size_t pos = 0;
    while (pos < text.size()) {
        size_t colon = text.find(':', pos);
        if (colon == std::string::npos) throw ConfigError("dimension vector wants 'vertex:count'");
        std::string name = text.substr(pos, colon - pos);
        size_t comma = text.find(',', colon);
        std::string value =
            text.substr(colon + 1, (comma == std::string::npos ? text.size() : comma) - colon - 1);
        auto v = q.find_vertex(name);
        if (!v) throw ConfigError("unknown vertex in dimension vector: " + name);
        try {
            d[*v] = std::stol(value);
        } catch (...) {
            throw ConfigError("bad dimension count: " + value);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return d;
}

json dims_to_json(const Quiver& q, const DimVector& d) {
    json j = json::object();
    for (int v = 0; v < q.num_vertices(); ++v) j[q.vertex_name(v)] = d[v];
    return j;
}

json matrix_to_json(const DenseMat& m) {
    json rows = json::array();
    for (long r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (long c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

DenseMat matrix_from_json(const json& j) {
    if (!j.is_array()) throw ConfigError("matrix JSON must be an array of rows");
    const long rows = static_cast<long>(j.size());
    const long cols = rows ? static_cast<long>(j[0].size()) : 0;
    DenseMat m(rows, cols);
    for (long r = 0; r < rows; ++r) {
        if (static_cast<long>(j[r].size()) != cols) throw ConfigError("ragged matrix JSON");
        for (long c = 0; c < cols; ++c) {
            const auto& cell = j[r][c];
            m.at(r, c) = cell.is_string() ? Rational::from_string(cell.get<std::string>())
                                          : Rational(cell.get<long>());
        }
    }
    return m;
}

json rep_point_to_json(const RepPoint& rho) {
    const DoubledQuiver& q = *rho.quiver();
    json j;
    j["dims"] = json::object();
    for (int v = 0; v < q.num_vertices(); ++v) j["dims"][q.vertex_name(v)] = rho.dims()[v];
    j["matrices"] = json::object();
    for (int e = 0; e < q.num_edges(); ++e) j["matrices"][q.edge_name(e)] = matrix_to_json(rho.matrix(e));
    return j;
}

RepPoint rep_point_from_json(const json& j, const QuiverPtr& q) {
    DimVector d = dims_from_json(j.at("dims"), q->base());
    RepPoint rho(q, d);
    for (auto it = j.at("matrices").begin(); it != j.at("matrices").end(); ++it) {
        auto e = q->find_edge(it.key());
        if (!e) throw ConfigError("matrix for an unknown edge: " + it.key());
        DenseMat m = matrix_from_json(it.value());
        if (m.rows() != d[q->head(*e)] || m.cols() != d[q->tail(*e)])
            throw ShapeMismatch("matrix shape does not match the edge endpoints");
        rho.matrix(*e) = std::move(m);
    }
    return rho;
}

json form_to_json(const NCForm& w) {
    json out = json::array();
    for (const auto& [m, c] : w.terms()) {
        json tuple = json::array();
        tuple.push_back(c.to_string());
        for (const Path& p : m.slots) tuple.push_back(path_to_string(*w.quiver(), p));
        out.push_back(std::move(tuple));
    }
    return out;
}

namespace {

Path path_from_text(const std::string& text, const QuiverPtr& q) {
    if (text.rfind("e_", 0) == 0) {
        auto v = q->find_vertex(text.substr(2));
        if (v) return Path::trivial(*v);
    }
    std::vector<int> edges;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t dot = text.find('.', pos);
        std::string name = text.substr(pos, (dot == std::string::npos ? text.size() : dot) - pos);
        auto e = q->find_edge(name);
        if (!e) throw UnknownEdge(name);
        edges.push_back(*e);
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return make_path(*q, edges);
}

}  // namespace

NCForm form_from_json(const json& j, const QuiverPtr& q) {
    if (!j.is_array()) throw ConfigError("form JSON must be an array of tuples");
    NCForm out;
    bool first = true;
    for (const auto& tuple : j) {
        if (!tuple.is_array() || tuple.size() < 2)
            throw ConfigError("form tuple wants [coeff, p0, ...]");
        Rational c = tuple[0].is_string() ? Rational::from_string(tuple[0].get<std::string>())
                                          : Rational(tuple[0].get<long>());
        FormMonomial m;
        for (size_t i = 1; i < tuple.size(); ++i)
            m.slots.push_back(path_from_text(tuple[i].get<std::string>(), q));
        if (first) {
            out = NCForm(q, m.degree());
            first = false;
        }
        out.add_term(m, c);
    }
    if (first) throw ConfigError("empty form JSON");
    return out;
}

}  // namespace necklace
