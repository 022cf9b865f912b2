/**
 * @file permutation.hpp
 * @brief Permutations of {1..m} in one-line notation.
 *
 * Composition is function composition with the right factor applied first:
 * (p * q)(x) = p(q(x)). All public indices are 1-based.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptalg {

class Permutation {
public:
    /// Degree-0 permutation (the unique element of S(0)).
    Permutation() = default;

    /// Validates that `images` is a bijection of {1..m}; images[x-1] = p(x).
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int m);

    /// The transposition (x y) in S(m). x == y gives the identity.
    static Permutation transposition(int m, int x, int y);

    /// Product of the given cycles (each cycle x1 -> x2 -> ... -> x1).
    /// Cycles are applied right to left, as in ordinary cycle notation.
    static Permutation from_cycles(int m, const std::vector<std::vector<int>> &cycles);

    /// Inverse of rank(): the r-th permutation of S(m) in lexicographic
    /// order of one-line notation.
    static Permutation unrank(int m, std::size_t r);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
    std::span<const int> images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    bool fixes(int x) const { return (*this)(x) == x; }

    /// Number of cycles, fixed points included.
    int cycle_count() const;
    int sign() const;
    int inversions() const;

    /// Non-trivial cycles, each starting at its smallest element, ordered by
    /// that element.
    std::vector<std::vector<int>> cycles() const;

    /// Cycle type as a weakly decreasing list of cycle lengths.
    std::vector<int> cycle_type() const;

    /// Embedding S(m) -> S(m'), m' >= m, fixing the new points.
    Permutation extended(int m) const;

    /// Restriction to S(m); throws if a point above m is moved.
    Permutation restricted(int m) const;

    /// Lexicographic rank of the one-line notation within S(degree).
    std::size_t rank() const;

    /// Indices i such that p = s_{i_1} s_{i_2} ... s_{i_k} with s_i = (i i+1),
    /// k = number of inversions.
    std::vector<int> adjacent_word() const;

    auto operator<=>(const Permutation &) const = default;
    bool operator==(const Permutation &) const = default;

private:
    std::vector<int> images_;
};

/// p∘q, i.e. (p∘q)(x) = p(q(x)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation &p, const Permutation &q);

inline Permutation operator*(const Permutation &p, const Permutation &q) {
    return compose(p, q);
}

/// Labels (a, b) with p(a) = m and b = p(m).
struct ABLabel {
    int a;
    int b;
    bool operator==(const ABLabel &) const = default;
};

ABLabel classify(const Permutation &p);

inline int cycle_count(const Permutation &p) { return p.cycle_count(); }

std::size_t factorial(int m);

/// All of S(m), indexed by rank().
std::vector<Permutation> all_permutations(int m);

/// All permutations of S(m) with the same cycle type as p.
std::vector<Permutation> conjugacy_class(const Permutation &p);

/// "2,3,1"
std::string to_one_line(const Permutation &p);

/// "(132)", "(12)(34)", "id". Elements are comma-separated when m >= 10.
std::string to_cycle_string(const Permutation &p);

/// Accepts one-line ("2,3,1"), cycle notation ("(132)", "(1,3,2)(4,5)"),
/// and "id". Cycle notation and "id" need the degree m; one-line notation
/// infers it (m < 0 means infer).
Permutation parse_permutation(std::string_view text, int m = -1);

} // namespace ptalg
