#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace necklace {

struct Edge {
    std::string name;
    int tail;  // t(a)
    int head;  // h(a)
};

// Directed graph with a fixed vertex and edge order; the order set here is
// the total order used everywhere downstream (path comparison, canonical
// rotations, echelon pivots).
class Quiver {
  public:
    Quiver(std::vector<std::string> vertices, std::vector<Edge> edges);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::string& vertex_name(int v) const { return vertices_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    int tail(int e) const { return edges_[e].tail; }
    int head(int e) const { return edges_[e].head; }
    const std::string& edge_name(int e) const { return edges_[e].name; }
    std::optional<int> find_edge(const std::string& name) const;
    std::optional<int> find_vertex(const std::string& name) const;

    bool connected() const;
    std::vector<std::vector<int>> components() const;  // vertex lists

    friend bool operator==(const Quiver& a, const Quiver& b);

  private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

// The double: every base edge a gets a reverse a* with t(a*) = h(a),
// h(a*) = t(a). Edges are interleaved (a0, a0*, a1, a1*, ...), so
// reverse(e) = e ^ 1 and eps(e) = +1 exactly on base edges.
class DoubledQuiver {
  public:
    explicit DoubledQuiver(Quiver base);

    const Quiver& base() const { return base_; }
    int num_vertices() const { return base_.num_vertices(); }
    const std::string& vertex_name(int v) const { return base_.vertex_name(v); }
    std::optional<int> find_vertex(const std::string& name) const { return base_.find_vertex(name); }

    int num_edges() const { return static_cast<int>(edges_.size()); }
    int tail(int e) const { return edges_[e].tail; }
    int head(int e) const { return edges_[e].head; }
    const std::string& edge_name(int e) const { return edges_[e].name; }
    std::optional<int> find_edge(const std::string& name) const;

    int reverse(int e) const { return e ^ 1; }
    int eps(int e) const { return (e & 1) ? -1 : 1; }
    bool is_base(int e) const { return (e & 1) == 0; }
    int num_base_edges() const { return base_.num_edges(); }
    int base_edge(int i) const { return 2 * i; }  // index in the double

    const std::vector<int>& out_edges(int v) const { return out_[v]; }

    friend bool operator==(const DoubledQuiver& a, const DoubledQuiver& b) {
        return a.base_ == b.base_;
    }

  private:
    Quiver base_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
};

using QuiverPtr = std::shared_ptr<const DoubledQuiver>;

// Throws NameCollision if a base edge name already ends in '*'.
QuiverPtr double_quiver(const Quiver& q);

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b);
void check_same_quiver(const QuiverPtr& a, const QuiverPtr& b);

// Convenience constructors used throughout the tests and the CLI.
Quiver loop_quiver(int nloops);                    // one vertex "0", loops x, y, z, ...
Quiver line_quiver(int n);                         // A_n orientation v1 -> v2 -> ... -> vn
Quiver star_quiver(int arms);                      // D-type star: center c, arms a1..ak pointing in
Quiver kronecker_quiver(int nedges);               // two vertices, nedges parallel edges

}  // namespace necklace
