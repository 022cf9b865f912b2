/**
 * @file algebra.hpp
 * @brief The algebra spanned by partially transposed permutation operators
 * V(σ)^{t_n}, σ ∈ S(n), as formal linear combinations of generator symbols.
 *
 * The formal layer never identifies linearly dependent generators (they are
 * dependent when d < n); dependence is measured only by the tensor oracle.
 */

#pragma once

#include "ptalg/partition.hpp"
#include "ptalg/permutation.hpp"
#include "ptalg/polynomial.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ptalg {

struct AlgebraContext {
    int n = 2;
    int d = 1;              ///< ignored in symbolic mode
    bool symbolic = false;

    static AlgebraContext numeric(int n, int d);
    static AlgebraContext with_symbolic_d(int n);

    bool operator==(const AlgebraContext &) const = default;
};

/// V(σ)^{t_n} V(ρ)^{t_n} = d^{power} V(result)^{t_n}.
struct GeneratorProduct {
    int power = 0;
    Permutation result;
    bool operator==(const GeneratorProduct &) const = default;
};

GeneratorProduct mul_generators(const Permutation &sigma, const Permutation &rho);

template <class Scalar>
class BasicElement {
public:
    using Terms = std::map<Permutation, Scalar>;

    explicit BasicElement(AlgebraContext ctx);

    static BasicElement generator(AlgebraContext ctx, const Permutation &sigma, Scalar c = Scalar(1));
    static BasicElement unit(AlgebraContext ctx);

    const AlgebraContext &context() const { return ctx_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Permutation &sigma) const;

    /// Adds c·V(σ)^{t_n}, dropping the term if the result is negligible.
    void add_term(const Permutation &sigma, const Scalar &c);

    BasicElement &operator+=(const BasicElement &o);
    BasicElement &operator-=(const BasicElement &o);
    BasicElement &operator*=(const Scalar &c);

    friend BasicElement operator+(BasicElement a, const BasicElement &b) { return a += b; }
    friend BasicElement operator-(BasicElement a, const BasicElement &b) { return a -= b; }
    friend BasicElement operator*(BasicElement a, const Scalar &c) { return a *= c; }
    friend BasicElement operator*(const Scalar &c, BasicElement a) { return a *= c; }
    bool operator==(const BasicElement &) const = default;

private:
    void check_context(const BasicElement &o) const;
    AlgebraContext ctx_;
    Terms terms_;
};

using Element = BasicElement<double>;
using SymbolicElement = BasicElement<Polynomial>;

/// Bilinear extension of mul_generators.
template <class Scalar>
BasicElement<Scalar> mul(const BasicElement<Scalar> &x, const BasicElement<Scalar> &y);

template <class Scalar>
BasicElement<Scalar> operator*(const BasicElement<Scalar> &x, const BasicElement<Scalar> &y) {
    return mul(x, y);
}

/// Term-wise σ ↦ σ^{-1} (coefficients are real).
template <class Scalar>
BasicElement<Scalar> adjoint(const BasicElement<Scalar> &x);

/// "c1*perm1 + c2*perm2"; perms in cycle notation, the identity as "id".
template <class Scalar>
std::string to_string(const BasicElement<Scalar> &x);

Element parse_element(std::string_view text, AlgebraContext ctx);
SymbolicElement parse_symbolic_element(std::string_view text, int n);

/// Substitutes a numeric d into every coefficient.
Element evaluate(const SymbolicElement &x, int d);

/// w/(n-2)! V(an)^{t_n} Σ_{σ∈S(n-2)} φ_{ji}(σ^{-1}) V[(a n-1) σ (b n-1)].
/// Indices are 1-based; requires n >= 3 and a numeric context.
Element u_element(const Partition &alpha, int a, int b, int i, int j, AlgebraContext ctx);

/// All u-elements of alpha, indexed by A = (a-1)w + (i-1) and
/// B = (b-1)w + (j-1): family[A][B] = u^{ab}_{ij}.
std::vector<std::vector<Element>> u_family(const Partition &alpha, AlgebraContext ctx);

} // namespace ptalg
