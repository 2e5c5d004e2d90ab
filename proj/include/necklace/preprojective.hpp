#pragma once

#include <map>
#include <memory>
#include <vector>

#include "necklace/matrix_series.hpp"
#include "necklace/path.hpp"
#include "necklace/root_theory.hpp"
#include "necklace/sparse_matrix.hpp"

namespace necklace {

// Per-degree echelonized quotient of the path algebra of a double by the
// two-sided ideal generated by (w - c), w = sum_a [a, a*], truncated at
// degree N. For c = 0 the ideal is graded and every degree carries an exact
// echelon basis of its ideal component; for c != 0 the ideal is only
// filtered and the echelon lives in the stacked space of paths of length
// <= N (longer paths reduce to shorter ones plus scalars).
class TruncatedQuotient {
  public:
    TruncatedQuotient(QuiverPtr q, std::map<int, Rational> c, int truncation);

    const QuiverPtr& quiver() const { return q_; }
    int truncation() const { return trunc_; }
    bool deformed() const { return deformed_; }
    const std::map<int, Rational>& parameter() const { return c_; }

    // graded dimensions (c = 0 only)
    long dim(int degree) const;
    long dim(int degree, int i, int j) const;

    // Reduction modulo the echelonized ideal; the result is supported on
    // non-pivot monomials. Throws TruncationExceeded above the truncation.
    PathAlgebraElement normal_form(const PathAlgebraElement& x) const;

    // Quotient basis (non-pivot paths) of degree k, block (i, j); c = 0 only.
    std::vector<Path> basis(int degree, int i, int j) const;
    std::vector<Path> basis(int degree) const;

  private:
    friend TruncatedQuotient build_quotient(QuiverPtr, std::map<int, Rational>, int);

    void build_graded();
    void build_filtered();

    long col_graded(const Path& p) const;   // column of p inside its (k,i,j) block
    long col_filtered(const Path& p) const; // column in the stacked <=N space
    SparseVec to_vec(const PathAlgebraElement& x) const;
    PathAlgebraElement from_vec(const SparseVec& v, int degree, int i, int j) const;

    QuiverPtr q_;
    std::map<int, Rational> c_;
    bool deformed_ = false;
    int trunc_;
    std::shared_ptr<PathTable> paths_;

    // c = 0: one echelon per (degree, i, j); columns are lex ranks in block
    std::map<std::tuple<int, int, int>, EchelonBasis> graded_;
    // c != 0: one echelon per (i, j) over paths of length <= N, columns
    // ordered by (length descending, lex rank)
    std::map<std::pair<int, int>, EchelonBasis> filtered_;
    std::vector<long> offsets_;  // column offset per length, filtered case
};

TruncatedQuotient build_quotient(QuiverPtr q, std::map<int, Rational> c, int truncation);

// Matrix-valued graded dimensions dim(e_i Pi_k e_j) for k <= N.
MatrixSeries graded_dims(const TruncatedQuotient& tq);

// Echelon of the image of the ideal inside the cycle space, degree by
// degree: in the commutator quotient the ideal component of degree k is
// spanned by the classes of w r over paths r of length k - 2. Gives the
// graded dimensions of the commutator quotient of the preprojective algebra
// and the membership test behind the bracket-descent check.
class CycleQuotient {
  public:
    explicit CycleQuotient(QuiverPtr q);

    long dim_l(int degree);                        // dim of the quotient layer
    bool ideal_class_member(const NecklaceElement& x);  // class lies in the ideal image

  private:
    struct Layer {
        std::shared_ptr<NecklaceTable> cycles;
        EchelonBasis span;
    };
    Layer& layer(int degree);
    SparseVec coords(const Layer& l, const NecklaceElement& x, int degree) const;

    QuiverPtr q_;
    std::shared_ptr<NecklaceTable> table_;
    std::map<int, Layer> layers_;
};

struct DegreeCheck {
    int degree;
    bool pass;
    std::string expected, actual;
};

struct Report {
    std::string name;
    bool pass = true;
    std::vector<DegreeCheck> lines;
    void add(int degree, bool ok, std::string expected, std::string actual);
};

// dim Pi_k against the coefficients of the inverse series of
// I - C t + t^2 I, matrix-level. Requires a Wild quiver.
Report hilbert_check(const Quiver& q, int max_degree);

// Coefficientwise identity Tr(P + t^2 P - t P C) = |I| at t^0.
Report euler_check(const Quiver& q, int max_degree);

// dim of the degree-k associative-center probe: {z in Pi_k block-diagonal :
// za = az in Pi_{k+1} for all edges}. c = 0, k + 1 <= truncation.
long center_probe(const TruncatedQuotient& tq, int degree);

// dim L_k = dim of the commutator quotient of Pi in degree k (c = 0).
std::vector<long> l_dims(const TruncatedQuotient& tq, int max_degree);

// Bracket descent: for spanning ideal elements r = p w q of degree <= D and
// basis cycles s of length <= D, the necklace bracket {class r, s} lies in
// the ideal image; also checks the hamiltonian route theta_p(w) = 0.
Report descent_check(const TruncatedQuotient& tq, int max_degree);

}  // namespace necklace
