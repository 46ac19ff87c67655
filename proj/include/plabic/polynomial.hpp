#pragma once

#include "plabic/arith.hpp"

#include <map>
#include <span>
#include <vector>

namespace plabic {

// Dense exponent vector over a fixed, ordered variable basis.
using Exponent = std::vector<int>;

// a <= b in every coordinate.
bool dominated_by(const Exponent& a, const Exponent& b);
Exponent add(const Exponent& a, const Exponent& b);

// Sparse polynomial with integer coefficients in a fixed number of variables.
class Polynomial {
public:
    explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}

    static Polynomial one(std::size_t variables);

    std::size_t variables() const { return variables_; }
    const std::map<Exponent, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c * x^e; terms that cancel are removed.
    void add_term(const Exponent& e, const Integer& c);

    Rational evaluate(std::span<const Rational> values) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const = default;

private:
    std::size_t variables_;
    std::map<Exponent, Integer> terms_;
};

} // namespace plabic
