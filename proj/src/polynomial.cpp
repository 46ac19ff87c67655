#include "plabic/polynomial.hpp"

#include "plabic/error.hpp"

namespace plabic {

bool dominated_by(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Exponent add(const Exponent& a, const Exponent& b) {
    Exponent out(a);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return out;
}

Polynomial Polynomial::one(std::size_t variables) {
    Polynomial p(variables);
    p.add_term(Exponent(variables, 0), 1);
    return p;
}

void Polynomial::add_term(const Exponent& e, const Integer& c) {
    if (e.size() != variables_)
        throw ParameterError("exponent length does not match the polynomial ring");
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
    if (values.size() != variables_)
        throw ParameterError("evaluation point has the wrong number of coordinates");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int p = 0; p < e[i]; ++p)
                term *= values[i];
        total += term;
    }
    return total;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_)
        out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_)
        out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (o.variables_ != variables_)
        throw ParameterError("multiplying polynomials over different rings");
    Polynomial out(variables_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            out.add_term(add(ea, eb), ca * cb);
    return out;
}

} // namespace plabic
