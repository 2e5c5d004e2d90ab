#include "necklace/quiver.hpp"

#include <set>

#include "necklace/errors.hpp"

namespace necklace {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::set<std::string> vnames(vertices_.begin(), vertices_.end());
    if (vnames.size() != vertices_.size()) throw Error("duplicate vertex name");
    std::set<std::string> enames;
    for (const Edge& e : edges_) {
        if (!enames.insert(e.name).second) throw Error("duplicate edge name: " + e.name);
        if (e.tail < 0 || e.tail >= num_vertices() || e.head < 0 || e.head >= num_vertices())
            throw Error("edge endpoint out of range: " + e.name);
    }
}

std::optional<int> Quiver::find_edge(const std::string& name) const {
    for (int e = 0; e < num_edges(); ++e)
        if (edges_[e].name == name) return e;
    return std::nullopt;
}

std::optional<int> Quiver::find_vertex(const std::string& name) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (vertices_[v] == name) return v;
    return std::nullopt;
}

std::vector<std::vector<int>> Quiver::components() const {
    std::vector<int> comp(num_vertices(), -1);
    int ncomp = 0;
    for (int start = 0; start < num_vertices(); ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack{start};
        comp[start] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Edge& e : edges_) {
                int other = -1;
                if (e.tail == v) other = e.head;
                else if (e.head == v) other = e.tail;
                if (other >= 0 && comp[other] < 0) {
                    comp[other] = ncomp;
                    stack.push_back(other);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> out(ncomp);
    for (int v = 0; v < num_vertices(); ++v) out[comp[v]].push_back(v);
    return out;
}

bool Quiver::connected() const { return num_vertices() == 0 || components().size() == 1; }

bool operator==(const Quiver& a, const Quiver& b) {
    if (a.vertices_ != b.vertices_) return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (size_t i = 0; i < a.edges_.size(); ++i) {
        const Edge &x = a.edges_[i], &y = b.edges_[i];
        if (x.name != y.name || x.tail != y.tail || x.head != y.head) return false;
    }
    return true;
}

DoubledQuiver::DoubledQuiver(Quiver base) : base_(std::move(base)) {
    for (int i = 0; i < base_.num_edges(); ++i) {
        const Edge& e = base_.edge(i);
        edges_.push_back(e);
        edges_.push_back(Edge{e.name + "*", e.head, e.tail});
    }
    out_.assign(base_.num_vertices(), {});
    for (int e = 0; e < num_edges(); ++e) out_[edges_[e].tail].push_back(e);
}

std::optional<int> DoubledQuiver::find_edge(const std::string& name) const {
    for (int e = 0; e < num_edges(); ++e)
        if (edges_[e].name == name) return e;
    return std::nullopt;
}

QuiverPtr double_quiver(const Quiver& q) {
    for (int e = 0; e < q.num_edges(); ++e)
        if (!q.edge_name(e).empty() && q.edge_name(e).back() == '*')
            throw NameCollision(q.edge_name(e));
    return std::make_shared<const DoubledQuiver>(q);
}

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void check_same_quiver(const QuiverPtr& a, const QuiverPtr& b) {
    if (!same_quiver(a, b)) throw QuiverMismatch();
}

Quiver loop_quiver(int nloops) {
    static const char* names[] = {"x", "y", "z", "u", "v", "w"};
    std::vector<Edge> edges;
    for (int i = 0; i < nloops; ++i)
        edges.push_back(Edge{i < 6 ? names[i] : "x" + std::to_string(i), 0, 0});
    return Quiver({"0"}, edges);
}

Quiver line_quiver(int n) {
    std::vector<std::string> vs;
    for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back(Edge{"a" + std::to_string(i + 1), i, i + 1});
    return Quiver(vs, edges);
}

Quiver star_quiver(int arms) {
    std::vector<std::string> vs{"c"};
    std::vector<Edge> edges;
    for (int i = 1; i <= arms; ++i) {
        vs.push_back("v" + std::to_string(i));
        edges.push_back(Edge{"a" + std::to_string(i), i, 0});
    }
    return Quiver(vs, edges);
}

Quiver kronecker_quiver(int nedges) {
    std::vector<Edge> edges;
    for (int i = 1; i <= nedges; ++i) edges.push_back(Edge{"a" + std::to_string(i), 0, 1});
    return Quiver({"1", "2"}, edges);
}

}  // namespace necklace
