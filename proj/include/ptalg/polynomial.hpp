/**
 * @file polynomial.hpp
 * @brief Integer polynomials in the indeterminate d.
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ptalg {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long long constant); // NOLINT(google-explicit-constructor)

    /// Coefficients in ascending powers; trailing zeros are trimmed.
    static Polynomial from_coefficients(std::vector<long long> coeffs);

    /// The monomial d^k.
    static Polynomial d(int k = 1);

    const std::vector<long long> &coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    long long coefficient(int k) const;
    int term_count() const;

    double evaluate(double d) const;

    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Polynomial &o);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial &b) { return a *= b; }
    bool operator==(const Polynomial &) const = default;

private:
    void trim();
    std::vector<long long> coeffs_;
};

/// Descending powers, integer coefficients, no spaces: "d^2-1", "2d", "-d+3".
std::string to_string(const Polynomial &p);

/// Inverse of to_string; also accepts '*' between coefficient and d.
Polynomial parse_polynomial(std::string_view text);

} // namespace ptalg
