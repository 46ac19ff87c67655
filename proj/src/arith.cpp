#include "plabic/arith.hpp"

#include "plabic/error.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace plabic {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw FormatError("malformed rational '" + std::string(text) + "'");
        Integer d(std::string{den});
        if (d == 0)
            throw FormatError("zero denominator in '" + std::string(text) + "'");
        value = Rational(Integer(std::string{num}), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            throw FormatError("malformed decimal '" + std::string(text) + "'");
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        Integer w = whole.empty() ? Integer(0) : Integer(std::string{whole});
        value = Rational(w * scale + Integer(std::string{frac}), scale);
    } else {
        if (!all_digits(body))
            throw FormatError("malformed rational '" + std::string(text) + "'");
        value = Rational(Integer(std::string{body}));
    }
    value.canonicalize();
    if (negative)
        value = -value;
    return value;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p())
        throw std::overflow_error("integer " + z.get_str() + " exceeds 64 bits");
    return static_cast<std::int64_t>(z.get_si());
}

} // namespace plabic
