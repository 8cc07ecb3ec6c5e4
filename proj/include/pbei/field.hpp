#ifndef PBEI_FIELD_HPP
#define PBEI_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace pbei {

/// Exact field element: machine-word residue for prime characteristic,
/// arbitrary-precision rational for characteristic 0. Interpretation is
/// supplied by the Field the element belongs to.
class Coeff {
public:
    Coeff() : rep_(std::uint64_t{0}) {}
    explicit Coeff(std::uint64_t r) : rep_(r) {}
    explicit Coeff(mpq_class q) : rep_(std::move(q)) {}

    std::uint64_t residue() const { return std::get<std::uint64_t>(rep_); }
    const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
    bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }

    bool operator==(const Coeff& o) const { return rep_ == o.rep_; }

private:
    std::variant<std::uint64_t, mpq_class> rep_;
};

/// Field arithmetic dispatcher. characteristic() == 0 means the rationals,
/// otherwise a prime field with residues in [0, p).
class Field {
public:
    Field() = default;
    explicit Field(std::uint64_t characteristic);

    std::uint64_t characteristic() const { return p_; }

    Coeff zero() const;
    Coeff one() const;
    Coeff from_int(long v) const;
    Coeff from_rational(const mpq_class& q) const;  // char p: reduce num/den mod p

    bool is_zero(const Coeff& a) const;
    bool is_one(const Coeff& a) const;
    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    Coeff inv(const Coeff& a) const;
    Coeff div(const Coeff& a, const Coeff& b) const;

    std::string to_string(const Coeff& a) const;

    bool operator==(const Field& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t v);

}  // namespace pbei

#endif
