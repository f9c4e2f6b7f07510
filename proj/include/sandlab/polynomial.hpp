#pragma once

#include <map>
#include <string>
#include <utility>

#include "sandlab/bigint.hpp"

namespace sandlab {

/// Univariate polynomial with non-negative integer coefficients. Zero
/// coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::map<int, BigInt> coefficients);

    static Polynomial monomial(int exponent, BigInt coefficient = 1);

    const std::map<int, BigInt>& coefficients() const { return coefficients_; }
    BigInt coefficient(int exponent) const;
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return coefficients_.empty(); }
    BigInt evaluate(const BigInt& x) const;

    Polynomial& add_term(int exponent, const BigInt& coefficient);
    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// e.g. "8 + 8x + 4x^2 + x^3"
    std::string to_string() const;

private:
    std::map<int, BigInt> coefficients_;
};

/// Bivariate polynomial in (x, y), used for the full Tutte polynomial.
class BivariatePolynomial {
public:
    using Exponents = std::pair<int, int>;

    const std::map<Exponents, BigInt>& coefficients() const { return coefficients_; }
    BivariatePolynomial& add_term(int x_exp, int y_exp, const BigInt& coefficient);
    BivariatePolynomial& operator+=(const BivariatePolynomial& other);
    /// Multiplies by x^a y^b.
    BivariatePolynomial shifted(int a, int b) const;
    BigInt evaluate(const BigInt& x, const BigInt& y) const;

    /// P(1, t) as a polynomial in t.
    Polynomial at_x_equals_one() const;

    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

private:
    std::map<Exponents, BigInt> coefficients_;
};

}  // namespace sandlab
