#include "liekit/rational.hpp"

namespace liekit {

Rat rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat x(num, den);
    x.canonicalize();
    return x;
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    // reject forms mpq_set_str would tolerate or misread: whitespace, decimals
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw std::invalid_argument("malformed rational literal: " + s);
    }
    Rat x;
    if (mpq_set_str(x.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (mpz_sgn(mpq_denref(x.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    x.canonicalize();
    return x;
}

std::string rat_to_string(const Rat& x) {
    return x.get_str();
}

} // namespace liekit
