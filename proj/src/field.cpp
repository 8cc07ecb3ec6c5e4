#include "pbei/field.hpp"

#include <stdexcept>

namespace pbei {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

Field::Field(std::uint64_t characteristic) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_))
        throw std::invalid_argument("characteristic " + std::to_string(p_) + " is not prime");
    if (p_ >= (1ull << 31)) throw std::invalid_argument("prime characteristic must be < 2^31");
}

Coeff Field::zero() const { return p_ ? Coeff(std::uint64_t{0}) : Coeff(mpq_class(0)); }
Coeff Field::one() const { return p_ ? Coeff(std::uint64_t{1}) : Coeff(mpq_class(1)); }

Coeff Field::from_int(long v) const {
    if (p_ == 0) return Coeff(mpq_class(v));
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return Coeff(static_cast<std::uint64_t>(r));
}

Coeff Field::from_rational(const mpq_class& q) const {
    if (p_ == 0) {
        mpq_class c = q;
        c.canonicalize();
        return Coeff(c);
    }
    mpz_class num = q.get_num() % static_cast<long>(p_);
    mpz_class den = q.get_den() % static_cast<long>(p_);
    long n = num.get_si(), d = den.get_si();
    if (n < 0) n += static_cast<long>(p_);
    if (d < 0) d += static_cast<long>(p_);
    if (d == 0) throw std::invalid_argument("denominator vanishes mod p");
    return div(Coeff(static_cast<std::uint64_t>(n)), Coeff(static_cast<std::uint64_t>(d)));
}

bool Field::is_zero(const Coeff& a) const {
    return p_ ? a.residue() == 0 : a.rational() == 0;
}
bool Field::is_one(const Coeff& a) const {
    return p_ ? a.residue() == 1 : a.rational() == 1;
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
    if (p_) {
        std::uint64_t s = a.residue() + b.residue();
        if (s >= p_) s -= p_;
        return Coeff(s);
    }
    return Coeff(mpq_class(a.rational() + b.rational()));
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
    if (p_) {
        std::uint64_t s = a.residue() + p_ - b.residue();
        if (s >= p_) s -= p_;
        return Coeff(s);
    }
    return Coeff(mpq_class(a.rational() - b.rational()));
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
    if (p_) return Coeff((a.residue() * b.residue()) % p_);
    return Coeff(mpq_class(a.rational() * b.rational()));
}

Coeff Field::neg(const Coeff& a) const {
    if (p_) return Coeff(a.residue() ? p_ - a.residue() : 0);
    return Coeff(mpq_class(-a.rational()));
}

Coeff Field::inv(const Coeff& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    if (p_ == 0) return Coeff(mpq_class(1 / a.rational()));
    // extended Euclid
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a.residue());
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Coeff(static_cast<std::uint64_t>(t));
}

Coeff Field::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

std::string Field::to_string(const Coeff& a) const {
    if (p_) return std::to_string(a.residue());
    return a.rational().get_str();
}

}  // namespace pbei
