#ifndef PBEI_GROEBNER_HPP
#define PBEI_GROEBNER_HPP

#include <vector>

#include "pbei/ideals.hpp"
#include "pbei/polynomial.hpp"

namespace pbei {

/// Reduced Groebner basis: auto-reduced, normalized (monic over F_p,
/// content-free integral over Q), sorted by leading monomial ascending.
/// Deterministic for a given generator list and ring order.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> basis;
};

GroebnerBasis buchberger(const IdealGenerators& gens);
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens);

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Full multivariate division: f = sum q_i * divisors_i + remainder, with no
/// remainder term divisible by any divisor's leading monomial.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool membership(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_equal(const IdealGenerators& a, const IdealGenerators& b);

/// (i : f) via one auxiliary variable t: (t*i + (1-t)*(f)) with a block
/// elimination order gives i meet (f); dividing by f yields the colon.
IdealGenerators colon_ideal(const IdealGenerators& i, const Polynomial& f);

/// i meet K[x_k, y_k : k in keep], via an elimination order putting the
/// discarded variables first. Result lives in i's ring.
IdealGenerators intersect_subring(const IdealGenerators& i, const std::vector<int>& keep);

}  // namespace pbei

#endif
