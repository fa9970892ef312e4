#include "eslab/rational.hpp"

namespace eslab {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash == std::string::npos ? text.size() : slash);
    const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (num_part.empty() || den_part.empty())
        throw ParseError("malformed rational literal: '" + text + "'");

    Integer num, den;
    if (mpz_set_str(num.get_mpz_t(), num_part.c_str(), 10) != 0)
        throw ParseError("malformed numerator in '" + text + "'");
    if (mpz_set_str(den.get_mpz_t(), den_part.c_str(), 10) != 0)
        throw ParseError("malformed denominator in '" + text + "'");
    if (sgn(den) == 0) throw ParseError("zero denominator in '" + text + "'");

    Rational value(num, den);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value) {
    return value.get_str();  // GMP prints "num" when den == 1, "num/den" otherwise
}

Rational pow2(long exp) {
    Rational r;
    if (exp >= 0) {
        mpz_ui_pow_ui(r.get_num().get_mpz_t(), 2, static_cast<unsigned long>(exp));
    } else {
        mpz_ui_pow_ui(r.get_den().get_mpz_t(), 2, static_cast<unsigned long>(-exp));
    }
    return r;  // already canonical: a power of two over one (or one over a power of two)
}

Rational rational_pow(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exp);
    return r;  // canonical since base was canonical
}

Integer floor_root(const Integer& n, unsigned long k) {
    if (sgn(n) < 0) throw std::domain_error("floor_root of negative value");
    if (k == 0) throw std::domain_error("floor_root with k = 0");
    Integer r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

unsigned long floor_log2(const Integer& n) {
    if (sgn(n) <= 0) throw std::domain_error("floor_log2 of non-positive value");
    return mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
}

Integer ceil_rational_times_sqrt(const Integer& p, const Integer& q, const Integer& v) {
    if (sgn(p) <= 0 || sgn(q) <= 0 || sgn(v) < 0)
        throw std::domain_error("ceil_rational_times_sqrt requires p, q > 0 and v >= 0");
    // Smallest k with (k*q)^2 >= p^2 * v.
    const Integer target = p * p * v;
    Integer root = floor_root(target, 2);
    while (root * root < target) ++root;  // exact ceil of sqrt(target)
    // k = ceil(root' / q) where root' = ceil(sqrt(target)).
    Integer k = (root + q - 1) / q;
    // Guard against the strict/non-strict boundary: k*q must satisfy (kq)^2 >= target.
    while (k * q * (k * q) < target) ++k;
    return k;
}

Integer binomial(const Integer& n, unsigned long k) {
    if (sgn(n) < 0) throw std::domain_error("binomial with negative n");
    if (Integer(k) > n) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

}  // namespace eslab
