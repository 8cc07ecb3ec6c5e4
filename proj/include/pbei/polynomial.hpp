#ifndef PBEI_POLYNOMIAL_HPP
#define PBEI_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "pbei/ring.hpp"

namespace pbei {

struct Term {
    Monomial monomial;
    Coeff coeff;
};

/// Exact multivariate polynomial; terms kept sorted descending in the
/// ring's monomial order, no zero coefficients stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().monomial; }
    int degree() const;  // -1 for zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Coeff& c) const;
    /// this - c * m * o  (the reduction workhorse)
    Polynomial submul(const Coeff& c, const Monomial& m, const Polynomial& o) const;

    bool operator==(const Polynomial& o) const;

    /// Common Z^n multidegree of all terms if multihomogeneous
    /// (component i = exponent of x_i plus exponent of y_i).
    std::optional<std::vector<int>> multidegree() const;
    /// Common standard degree if homogeneous.
    std::optional<int> standard_degree() const;

    /// Monic in char p; integer coefficients with content 1 and positive
    /// leading coefficient in char 0.
    Polynomial normalized() const;

    std::string to_string() const;

    /// Reinterpret in a compatible ring (same variables meaningful, possibly
    /// different order or extra vars); terms are re-sorted.
    Polynomial in_ring(const RingPtr& r) const;

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Coeff& c);
    static Polynomial from_term(RingPtr ring, const Monomial& m, const Coeff& c);

private:
    void normalize_terms();  // sort + merge + prune

    RingPtr ring_;
    std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

/// `±c*x1^a*y3^b` term syntax; lossless with to_string.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

/// Substitute each variable v by images[v]; used by the ring isomorphisms.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

}  // namespace pbei

#endif
