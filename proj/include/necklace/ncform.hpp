#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "necklace/path.hpp"

namespace necklace {

// Monomial of a degree-n form in the tensor basis p0 dp1 ... dpn:
// slots = (p0, p1, ..., pn) with p1..pn nontrivial and h(p_k) = t(p_{k+1}).
struct FormMonomial {
    std::vector<Path> slots;

    int degree() const { return static_cast<int>(slots.size()) - 1; }
    int path_length() const;
    int tail() const { return slots.front().tail; }
    int head() const { return slots.back().head; }

    friend bool operator==(const FormMonomial& a, const FormMonomial& b) = default;
    friend std::strong_ordering operator<=>(const FormMonomial& a, const FormMonomial& b);
};

// Element of the space of noncommutative relative differential forms in a
// fixed degree. Multiplication re-normalizes to the tensor basis via the
// expansion (da)b = d(ab) - a db.
class NCForm {
  public:
    NCForm() = default;
    NCForm(QuiverPtr q, int degree) : q_(std::move(q)), degree_(degree) {}

    static NCForm from_element(const PathAlgebraElement& x);  // degree 0
    PathAlgebraElement to_element() const;                    // degree 0 only

    const QuiverPtr& quiver() const { return q_; }
    int degree() const { return degree_; }
    const std::map<FormMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const FormMonomial& m, const Rational& c);
    int max_path_length() const;

    NCForm& operator+=(const NCForm& o);
    NCForm& operator-=(const NCForm& o);
    NCForm& operator*=(const Rational& c);
    friend NCForm operator+(NCForm a, const NCForm& b) { return a += b; }
    friend NCForm operator-(NCForm a, const NCForm& b) { return a -= b; }
    friend NCForm operator*(const Rational& c, NCForm a) { return a *= c; }
    NCForm operator-() const;

    // Zero forms compare equal regardless of their stored degree.
    friend bool operator==(const NCForm& a, const NCForm& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;
        return a.degree_ == b.degree_ && same_quiver(a.q_, b.q_) && a.terms_ == b.terms_;
    }

    // Part with total path length m.
    NCForm path_graded_part(int m) const;

  private:
    QuiverPtr q_;
    int degree_ = 0;
    std::map<FormMonomial, Rational> terms_;
};

// Universal differential: p0 dp1...dpn -> dp0 dp1...dpn, zero when p0 is
// trivial. Satisfies d(d(w)) = 0 structurally.
NCForm d(const NCForm& w);

// Graded product.
NCForm form_mul(const NCForm& a, const NCForm& b);

// Right multiplication of a single monomial by a path, expanded to the
// tensor basis. Used by contractions and Lie derivatives.
NCForm mul_monomial_by_path(const QuiverPtr& q, const FormMonomial& m, const Path& b,
                            const Rational& coeff);
NCForm mul_form_by_element(const NCForm& a, const PathAlgebraElement& x);
NCForm mul_element_by_form(const PathAlgebraElement& x, const NCForm& a);

// Appends d-slots to every monomial (chain condition must hold, enforced).
NCForm append_slots(const NCForm& a, std::span<const Path> slots);

// Convenience: the 1-form x dp (x scalar 1) for a path, and products of
// d(edge) slots.
NCForm d_path(const QuiverPtr& q, const Path& p);
NCForm form_from_slots(const QuiverPtr& q, const std::vector<Path>& slots, const Rational& c = 1);

std::string form_to_string(const NCForm& w);

// All tensor-basis monomials of the given form degree and total path length.
std::vector<FormMonomial> enumerate_form_monomials(const QuiverPtr& q, int degree,
                                                   int path_length);

}  // namespace necklace
