#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "necklace/path.hpp"
#include "necklace/root_theory.hpp"
#include "necklace/splitmix.hpp"

namespace necklace {

// Small dense rational matrix.
class DenseMat {
  public:
    DenseMat() = default;
    DenseMat(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static DenseMat identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const Rational& at(long r, long c) const { return a_[r * cols_ + c]; }
    Rational& at(long r, long c) { return a_[r * cols_ + c]; }

    DenseMat mul(const DenseMat& o) const;
    DenseMat& operator+=(const DenseMat& o);
    DenseMat& operator-=(const DenseMat& o);
    DenseMat scaled(const Rational& c) const;
    Rational trace() const;
    bool is_zero() const;
    DenseMat inverse() const;  // throws on singular input

    friend bool operator==(const DenseMat& a, const DenseMat& b) = default;

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Assignment of a rational matrix of shape d_{h(a)} x d_{t(a)} to every
// edge of the double. Also serves as a tangent vector (same shape data).
class RepPoint {
  public:
    RepPoint(QuiverPtr q, DimVector d);

    // integer entries uniform in [-bound, bound]
    static RepPoint random(const QuiverPtr& q, const DimVector& d, SplitMix64& rng, long bound);

    const QuiverPtr& quiver() const { return q_; }
    const DimVector& dims() const { return d_; }
    const DenseMat& matrix(int e) const { return mats_[e]; }
    DenseMat& matrix(int e) { return mats_[e]; }

  private:
    QuiverPtr q_;
    DimVector d_;
    std::vector<DenseMat> mats_;
};

using TangentVector = RepPoint;

// Block-diagonal Lie algebra element with vanishing total trace.
class GroupElementLie {
  public:
    GroupElementLie(QuiverPtr q, DimVector d);  // zero blocks
    static GroupElementLie random(const QuiverPtr& q, const DimVector& d, SplitMix64& rng,
                                  long bound);

    const DimVector& dims() const { return d_; }
    const DenseMat& block(int v) const { return blocks_[v]; }
    DenseMat& block(int v) { return blocks_[v]; }
    void check_traceless() const;  // throws unless the trace sum vanishes

  private:
    QuiverPtr q_;
    DimVector d_;
    std::vector<DenseMat> blocks_;
};

// Blockwise evaluation; keys are (tail, head), values have shape
// d_head x d_tail. Multiplicative against the path order: a path "first a1
// then a2" evaluates to X_{a2} X_{a1}.
using BlockMatrix = std::map<std::pair<int, int>, DenseMat>;

DenseMat evaluate_path(const Path& p, const RepPoint& rho);
BlockMatrix evaluate(const PathAlgebraElement& x, const RepPoint& rho);

// Formal products of necklace classes, evaluated through traces; trivial
// cycles count the block dimensions.
class InvariantPolynomial {
  public:
    explicit InvariantPolynomial(QuiverPtr q) : q_(std::move(q)) {}

    // monomial = sorted multiset of nontrivial canonical cycles
    void add_monomial(std::vector<Path> cycles, const Rational& c);
    static InvariantPolynomial from_necklace(const NecklaceElement& x, const DimVector& d);

    const QuiverPtr& quiver() const { return q_; }
    const std::map<std::vector<Path>, Rational>& terms() const { return terms_; }
    int total_degree() const;

  private:
    QuiverPtr q_;
    std::map<std::vector<Path>, Rational> terms_;
};

Rational psi(const NecklaceElement& x, const RepPoint& rho);
Rational psi(const InvariantPolynomial& p, const RepPoint& rho);

// Moment map: block i carries the i-component of the evaluated moment
// element; the total trace vanishes identically.
GroupElementLie moment(const RepPoint& rho);

// Constant symplectic pairing of tangent vectors for the canonical 2-form.
// The orientation constant is fixed once by the moment-map identity and
// frozen: sum over base edges of Tr(u_{a*} v_a) - Tr(v_{a*} u_a).
Rational symplectic_pair(const TangentVector& u, const TangentVector& v);

// Infinitesimal base-change action: edge component x_{h(a)} X_a - X_a x_{t(a)}.
TangentVector group_action_vector(const GroupElementLie& x, const RepPoint& rho);

// Exact check of i_{xi_x}(Tr w-hat) = d Tr(x . moment), the two sides
// assembled independently (pairing vs. term-by-term differentiation of the
// moment word).
bool moment_identity_check(const RepPoint& rho, const GroupElementLie& x, const TangentVector& v);

// Exact partial derivative of rho -> psi(p, rho) in the matrix-entry
// coordinate (edge, i, j), via evaluation at 0..deg and finite differences.
Rational gradient_oracle(const InvariantPolynomial& p, const RepPoint& rho, int edge, long i,
                         long j);

// Poisson bracket of trace functions computed from the gradient oracle
// against the necklace bracket pushed through psi.
bool poisson_check(const NecklaceElement& p, const NecklaceElement& q, const RepPoint& rho);

struct StabilizationReport {
    uint64_t seed = 0;
    long samples = 0;
    long bound = 5;
    struct PerDegree {
        int degree;
        long monomials;
        long rank;
    };
    std::vector<PerDegree> degrees;
    bool full_rank() const;
};

// Ranks of the evaluation matrix of the invariant-monomial basis per total
// degree s <= max_degree at pseudorandom integer representation points.
// Injectivity in a degree is certified when rank equals the monomial count.
StabilizationReport stabilization_rank(const QuiverPtr& q, int max_degree, const DimVector& d,
                                       long samples, uint64_t seed, long bound = 5);

// Monomial basis of the degree-s invariants (multisets of nontrivial
// cycles of total length s).
std::vector<std::vector<Path>> invariant_monomials(const QuiverPtr& q, int degree);

}  // namespace necklace
