#include <doctest.h>

#include "pbei/ring.hpp"

using namespace pbei;

TEST_CASE("field arithmetic over Q") {
    Field f(0);
    Coeff a = f.from_rational(mpq_class(2, 3));
    Coeff b = f.from_rational(mpq_class(-1, 6));
    CHECK(f.add(a, b) == f.from_rational(mpq_class(1, 2)));
    CHECK(f.mul(a, b) == f.from_rational(mpq_class(-1, 9)));
    CHECK(f.is_one(f.mul(a, f.inv(a))));
    CHECK(f.is_zero(f.sub(a, a)));
    CHECK(f.neg(f.neg(a)) == a);
}

TEST_CASE("field arithmetic over F_p") {
    Field f(32003);
    Coeff a = f.from_int(-1);
    CHECK(a == Coeff(std::uint64_t{32002}));
    CHECK(f.is_one(f.mul(a, a)));
    for (long v : {1L, 2L, 31999L, 12345L}) {
        Coeff c = f.from_int(v);
        CHECK(f.is_one(f.mul(c, f.inv(c))));
    }
    // from_rational reduces numerator and denominator mod p
    CHECK(f.from_rational(mpq_class(1, 2)) == f.mul(f.from_int(1), f.inv(f.from_int(2))));
    CHECK_THROWS_AS(Field(4), std::invalid_argument);
    CHECK_THROWS_AS(Field(32004), std::invalid_argument);
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(32003));
    CHECK(!is_prime(1));
    CHECK(!is_prime(32001));
}

TEST_CASE("monomial arithmetic") {
    Monomial a, b;
    a.set_exponent(0, 2);
    a.set_exponent(3, 1);
    b.set_exponent(0, 1);
    b.set_exponent(2, 4);
    CHECK(a.degree() == 3);
    Monomial p = a * b;
    CHECK(p.degree() == 8);
    CHECK(p.exponent(0) == 3);
    CHECK(b.divides(p));
    CHECK(p.quotient_by(b) == a);
    CHECK(!a.divides(b));
    Monomial l = Monomial::lcm(a, b);
    CHECK(l.exponent(0) == 2);
    CHECK(l.exponent(2) == 4);
    CHECK(l.exponent(3) == 1);
    Monomial c;
    c.set_exponent(5, 1);
    CHECK(a.coprime(c));
    CHECK(!a.coprime(b));
}

TEST_CASE("degrevlex order") {
    RingPtr r = make_ring(2, 0);  // x1 x2 y1 y2
    const MonomialOrder& o = r->order;
    Monomial x1, x2, y1, y2;
    x1.set_exponent(0, 1);
    x2.set_exponent(1, 1);
    y1.set_exponent(2, 1);
    y2.set_exponent(3, 1);
    CHECK(o.compare(x1, x2) > 0);
    CHECK(o.compare(x2, y1) > 0);
    CHECK(o.compare(y1, y2) > 0);
    // degree dominates
    CHECK(o.compare(y2 * y2, x1) > 0);
    // revlex tie-break: x1*x2 > x1*y2? smaller in the last variable wins
    CHECK(o.compare(x1 * x2, x1 * y2) > 0);
    CHECK(o.compare(x1 * y2, x2 * y1) < 0);  // rightmost nonzero exponent negative
    CHECK(o.compare(x1, x1) == 0);
}

TEST_CASE("elimination order blocks") {
    RingPtr base = make_ring(2, 0);
    RingPtr ext = extend_ring_with_aux(*base);
    CHECK(ext->nvars() == 5);
    CHECK(ext->extra_vars == 1);
    // any power of t beats any t-free monomial
    Monomial t, big;
    t.set_exponent(4, 1);
    big.set_exponent(0, 7);
    CHECK(ext->order.compare(t, big) > 0);

    RingPtr elim = elimination_ring(*base, {2});  // eliminate vertex 1's pair
    Monomial x1e, x2e;
    x1e.set_exponent(0, 1);
    x2e.set_exponent(1, 3);
    CHECK(elim->order.compare(x1e, x2e) > 0);
}

TEST_CASE("variable names") {
    RingPtr r = make_ring(3, 0);
    CHECK(r->var_name(0) == "x1");
    CHECK(r->var_name(3) == "y1");
    CHECK(r->var_name(5) == "y3");
    CHECK(r->var_index("x2") == 1);
    CHECK(r->var_index("y3") == 5);
    CHECK(r->var_index("z9") == -1);
    RingPtr ext = extend_ring_with_aux(*r);
    CHECK(ext->var_name(6) == "t1");
}

TEST_CASE("ring construction guards") {
    CHECK_THROWS_AS(make_ring(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_ring(10, 0), std::invalid_argument);  // 2n+1 > kMaxVars
    CHECK_THROWS_AS(make_ring(3, 15), std::invalid_argument);  // not prime
    CHECK(make_ring(9, 0)->nvars() == 18);
}
