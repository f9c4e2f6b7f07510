#include "sandlab/polynomial.hpp"

#include "sandlab/error.hpp"

namespace sandlab {

Polynomial::Polynomial(std::map<int, BigInt> coefficients) {
    for (auto& [exp, coeff] : coefficients) add_term(exp, coeff);
}

Polynomial Polynomial::monomial(int exponent, BigInt coefficient) {
    Polynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

BigInt Polynomial::coefficient(int exponent) const {
    const auto it = coefficients_.find(exponent);
    return it == coefficients_.end() ? BigInt(0) : it->second;
}

int Polynomial::degree() const { return coefficients_.empty() ? -1 : coefficients_.rbegin()->first; }

BigInt Polynomial::evaluate(const BigInt& x) const {
    BigInt total = 0;
    for (const auto& [exp, coeff] : coefficients_) total += coeff * boost::multiprecision::pow(x, static_cast<unsigned>(exp));
    return total;
}

Polynomial& Polynomial::add_term(int exponent, const BigInt& coefficient) {
    if (exponent < 0) throw InvalidArgument("negative exponent");
    if (coefficient < 0) throw InvalidArgument("negative coefficient");
    if (coefficient == 0) return *this;
    coefficients_[exponent] += coefficient;
    return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [exp, coeff] : other.coefficients_) add_term(exp, coeff);
    return *this;
}

std::string Polynomial::to_string() const {
    if (coefficients_.empty()) return "0";
    std::string out;
    for (const auto& [exp, coeff] : coefficients_) {
        if (!out.empty()) out += " + ";
        if (exp == 0) {
            out += coeff.str();
            continue;
        }
        if (coeff != 1) out += coeff.str();
        out += "x";
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

BivariatePolynomial& BivariatePolynomial::add_term(int x_exp, int y_exp, const BigInt& coefficient) {
    if (coefficient == 0) return *this;
    auto& slot = coefficients_[{x_exp, y_exp}];
    slot += coefficient;
    if (slot == 0) coefficients_.erase({x_exp, y_exp});
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
    for (const auto& [exps, coeff] : other.coefficients_) add_term(exps.first, exps.second, coeff);
    return *this;
}

BivariatePolynomial BivariatePolynomial::shifted(int a, int b) const {
    BivariatePolynomial out;
    for (const auto& [exps, coeff] : coefficients_) out.coefficients_[{exps.first + a, exps.second + b}] = coeff;
    return out;
}

BigInt BivariatePolynomial::evaluate(const BigInt& x, const BigInt& y) const {
    BigInt total = 0;
    for (const auto& [exps, coeff] : coefficients_)
        total += coeff * boost::multiprecision::pow(x, static_cast<unsigned>(exps.first)) *
                 boost::multiprecision::pow(y, static_cast<unsigned>(exps.second));
    return total;
}

Polynomial BivariatePolynomial::at_x_equals_one() const {
    Polynomial out;
    for (const auto& [exps, coeff] : coefficients_) out.add_term(exps.second, coeff);
    return out;
}

}  // namespace sandlab
