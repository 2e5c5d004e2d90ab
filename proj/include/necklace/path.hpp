#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "necklace/quiver.hpp"
#include "necklace/rational.hpp"

namespace necklace {

// Edge path in a doubled quiver: either trivial at a vertex (empty edge
// list, tail == head) or a composable sequence with h(e_k) = t(e_{k+1}).
// Total order: by length, then trivial paths by vertex, else edge sequence
// lexicographically in the quiver's edge order.
struct Path {
    int tail = -1;
    int head = -1;
    std::vector<int> edges;

    static Path trivial(int vertex) { return Path{vertex, vertex, {}}; }

    bool is_trivial() const { return edges.empty(); }
    int length() const { return static_cast<int>(edges.size()); }

    friend bool operator==(const Path& a, const Path& b) {
        return a.tail == b.tail && a.edges == b.edges;
    }
    friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() <=> b.length();
        if (a.edges.empty()) return a.tail <=> b.tail;
        return a.edges <=> b.edges;
    }
};

// Concatenation p then q; nullopt when h(p) != t(q).
std::optional<Path> compose(const DoubledQuiver& q, const Path& a, const Path& b);
Path edge_path(const DoubledQuiver& q, int e);
Path make_path(const DoubledQuiver& q, const std::vector<int>& edges);  // validates composability

// Lexicographically least rotation of a closed path. Trivial paths are their
// own rotation.
Path canonical_rotation(const DoubledQuiver& q, const Path& p);

// Finite rational linear combination of paths. No zero coefficients stored.
class PathAlgebraElement {
  public:
    PathAlgebraElement() = default;
    explicit PathAlgebraElement(QuiverPtr q) : q_(std::move(q)) {}
    PathAlgebraElement(QuiverPtr q, const Path& p, const Rational& c = 1);

    static PathAlgebraElement unit(const QuiverPtr& q);  // sum of all trivial paths
    static PathAlgebraElement trivial(const QuiverPtr& q, int vertex);
    static PathAlgebraElement edge(const QuiverPtr& q, int e);

    const QuiverPtr& quiver() const { return q_; }
    const std::map<Path, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Path& p) const;
    void add_term(const Path& p, const Rational& c);
    int max_length() const;

    PathAlgebraElement& operator+=(const PathAlgebraElement& o);
    PathAlgebraElement& operator-=(const PathAlgebraElement& o);
    PathAlgebraElement& operator*=(const Rational& c);
    friend PathAlgebraElement operator+(PathAlgebraElement a, const PathAlgebraElement& b) { return a += b; }
    friend PathAlgebraElement operator-(PathAlgebraElement a, const PathAlgebraElement& b) { return a -= b; }
    friend PathAlgebraElement operator*(const Rational& c, PathAlgebraElement a) { return a *= c; }
    PathAlgebraElement operator-() const;
    friend bool operator==(const PathAlgebraElement& a, const PathAlgebraElement& b) {
        return same_quiver(a.q_, b.q_) && a.terms_ == b.terms_;
    }

    // Degree-k part (path length k), and the part supported on trivial paths.
    PathAlgebraElement graded_part(int k) const;

  private:
    QuiverPtr q_;
    std::map<Path, Rational> terms_;
};

// Bilinear extension of path concatenation; p*q = 0 when h(p) != t(q).
PathAlgebraElement pa_mul(const PathAlgebraElement& x, const PathAlgebraElement& y);
PathAlgebraElement commutator(const PathAlgebraElement& x, const PathAlgebraElement& y);

// Rational combination of closed paths stored in canonical rotation
// (trivial paths are length-0 cycles).
class NecklaceElement {
  public:
    NecklaceElement() = default;
    explicit NecklaceElement(QuiverPtr q) : q_(std::move(q)) {}

    const QuiverPtr& quiver() const { return q_; }
    const std::map<Path, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_cycle(const Path& canonical, const Rational& c);

    NecklaceElement& operator+=(const NecklaceElement& o);
    NecklaceElement& operator-=(const NecklaceElement& o);
    NecklaceElement& operator*=(const Rational& c);
    friend NecklaceElement operator+(NecklaceElement a, const NecklaceElement& b) { return a += b; }
    friend NecklaceElement operator-(NecklaceElement a, const NecklaceElement& b) { return a -= b; }
    friend NecklaceElement operator*(const Rational& c, NecklaceElement a) { return a *= c; }
    NecklaceElement operator-() const;
    friend bool operator==(const NecklaceElement& a, const NecklaceElement& b) {
        return same_quiver(a.q_, b.q_) && a.terms_ == b.terms_;
    }

    NecklaceElement graded_part(int k) const;

    // Any path-algebra representative (each cycle as its canonical word).
    PathAlgebraElement representative() const;

  private:
    QuiverPtr q_;
    std::map<Path, Rational> terms_;
};

// Projection to the commutator quotient: open paths die, closed paths go to
// their canonical rotation.
NecklaceElement necklace_project(const PathAlgebraElement& x);

// Path enumeration and lexicographic ranking per (length, tail, head) block.
class PathTable {
  public:
    explicit PathTable(QuiverPtr q);

    // #paths of given length from i to j; grows tables on demand.
    long count(int length, int i, int j) const;
    long count(int length) const;  // all blocks

    // Lexicographic rank of p within its (length, tail, head) block.
    long rank_in_block(const Path& p) const;
    Path path_at(int length, int i, int j, long rank) const;
    std::vector<Path> block(int length, int i, int j) const;
    std::vector<Path> all(int length) const;

    const QuiverPtr& quiver() const { return q_; }

  private:
    void ensure(int length) const;

    QuiverPtr q_;
    // counts_[k][v][j] = #paths of length k from v to j
    mutable std::vector<std::vector<std::vector<long>>> counts_;
};

// Canonical cycles of a given length, sorted, with index lookup.
class NecklaceTable {
  public:
    explicit NecklaceTable(QuiverPtr q) : q_(std::move(q)) {}

    const std::vector<Path>& cycles(int length) const;
    long index_of(const Path& canonical) const;  // within its length class
    long count(int length) const { return static_cast<long>(cycles(length).size()); }

  private:
    QuiverPtr q_;
    mutable std::map<int, std::vector<Path>> cycles_;
};

std::string path_to_string(const DoubledQuiver& q, const Path& p);

}  // namespace necklace
