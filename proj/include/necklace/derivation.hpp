#pragma once

#include <array>
#include <map>
#include <vector>

#include "necklace/ncform.hpp"

namespace necklace {

// R-linear derivation of the path algebra, determined by its values on
// edges; v(a) must have the endpoints of a.
class Derivation {
  public:
    explicit Derivation(QuiverPtr q);

    static Derivation euler(const QuiverPtr& q);  // a -> a, grading operator

    const QuiverPtr& quiver() const { return q_; }
    void set_value(int edge, PathAlgebraElement v);
    const PathAlgebraElement& value(int edge) const { return values_[edge]; }

    PathAlgebraElement apply(const Path& p) const;  // Leibniz; trivial paths -> 0
    PathAlgebraElement apply(const PathAlgebraElement& x) const;

  private:
    QuiverPtr q_;
    std::vector<PathAlgebraElement> values_;
};

// Element of P (x) P as a sparse pairing of paths.
using BiPoly = std::map<std::pair<Path, Path>, Rational>;

BiPoly bipoly_add(const BiPoly& a, const BiPoly& b);
void bipoly_add_term(BiPoly& dst, const Path& u, const Path& v, const Rational& c);

// Double derivation: edge -> P (x) P with the outer-bimodule endpoint
// condition t(u) = t(a), h(v) = h(a) per term.
class DoubleDerivation {
  public:
    explicit DoubleDerivation(QuiverPtr q);

    // The distinguished derivation a -> a (x) e_{h(a)} - e_{t(a)} (x) a.
    static DoubleDerivation distinguished(const QuiverPtr& q);

    // Coordinate derivation for a free algebra: edge -> e (x) e on itself,
    // zero on every other edge.
    static DoubleDerivation coordinate(const QuiverPtr& q, int edge);

    // Inner double derivation ad p for p in (P (x) P)^R:
    // a -> (a u) (x) v - u (x) (v a) summed over the terms u (x) v of p.
    static DoubleDerivation inner(const QuiverPtr& q, const BiPoly& p);

    const QuiverPtr& quiver() const { return q_; }
    void set_value(int edge, BiPoly v);
    const BiPoly& value(int edge) const { return values_[edge]; }

    BiPoly apply(const Path& p) const;  // outer Leibniz rule; trivial -> 0

  private:
    QuiverPtr q_;
    std::vector<BiPoly> values_;
};

// --- tensor-square (and -cube) forms -------------------------------------

struct BiMonomial {
    FormMonomial left, right;
    friend bool operator==(const BiMonomial& a, const BiMonomial& b) = default;
    friend std::strong_ordering operator<=>(const BiMonomial& a, const BiMonomial& b);
};

// Element of Omega (x) Omega. Keys carry their own bidegree (left and right
// form degrees); the total degree is fixed per element.
class BiForm {
  public:
    BiForm() = default;
    BiForm(QuiverPtr q, int total_degree) : q_(std::move(q)), degree_(total_degree) {}

    const QuiverPtr& quiver() const { return q_; }
    int total_degree() const { return degree_; }
    const std::map<BiMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const BiMonomial& m, const Rational& c);

    BiForm& operator+=(const BiForm& o);
    BiForm& operator-=(const BiForm& o);
    BiForm& operator*=(const Rational& c);
    friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
    friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }
    BiForm operator-() const;
    friend bool operator==(const BiForm& a, const BiForm& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;
        return a.degree_ == b.degree_ && same_quiver(a.q_, b.q_) && a.terms_ == b.terms_;
    }

  private:
    QuiverPtr q_;
    int degree_ = 0;
    std::map<BiMonomial, Rational> terms_;
};

// Element of Omega (x) Omega (x) Omega; only what the anticommutation checks
// need: addition and the zero test.
class TriForm {
  public:
    void add_term(const std::array<FormMonomial, 3>& m, const Rational& c);
    bool is_zero() const { return terms_.empty(); }
    TriForm& operator+=(const TriForm& o);

  private:
    std::map<std::array<FormMonomial, 3>, Rational> terms_;
};

// --- operators ------------------------------------------------------------

// Contraction with an ordinary derivation, extended as a super-derivation of
// degree -1. Throws DegreeZero on degree-0 input.
NCForm contract_der(const Derivation& th, const NCForm& w);

// Lie derivative of an ordinary derivation via the Cartan identity
// d i_th + i_th d.
NCForm lie_der(const Derivation& th, const NCForm& w);

// Double contraction i_Theta: degree-n forms to bidegree (k-1, n-k) sums.
BiForm contract_dd(const DoubleDerivation& th, const NCForm& w);

// Extension of i_Theta to Omega (x) Omega as a super-derivation of the
// tensor algebra (for the anticommutation identity).
TriForm contract_dd_biform(const DoubleDerivation& th, const BiForm& w);

// Double Lie derivative L_Theta (degree preserving, values in the tensor
// square).
BiForm lie_dd(const DoubleDerivation& th, const NCForm& w);

// Flip-with-sign map (alpha (x) beta) -> (-1)^{kl} beta alpha.
NCForm diamond(const BiForm& b);

// Reduced contraction and Lie derivative. The composition with the flip map
// is taken with the orientation that makes the moment element of the
// canonical 2-form sum_a da da* come out as sum_a [a, a*]; concretely these
// are -diamond(contract_dd(..)) and -diamond(lie_dd(..)).
NCForm contract_reduced(const DoubleDerivation& th, const NCForm& w);
NCForm lie_reduced(const DoubleDerivation& th, const NCForm& w);

// Super-derivation d of the tensor algebra, restricted to two factors.
BiForm d_biform(const BiForm& b);

// Outer bimodule action of forms on BiForm.
BiForm biform_left_mul(const NCForm& a, const BiForm& b);
BiForm biform_right_mul(const BiForm& b, const NCForm& a);

}  // namespace necklace
