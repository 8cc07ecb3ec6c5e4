#include <doctest.h>

#include "pbei/groebner.hpp"

using namespace pbei;

namespace {

using pbei::IdealGenerators;

IdealGenerators custom(const RingPtr& r, std::vector<Polynomial> gens) {
    IdealGenerators i;
    i.ring = r;
    i.gens = std::move(gens);
    i.tags.resize(i.gens.size());
    return i;
}

}  // namespace

TEST_CASE("textbook Groebner basis") {
    // hand computation: (x^2 - y^2, x*y) needs exactly the extra element y^3:
    // S(x^2-y^2, xy) = y*(x^2-y^2) - x*(xy) = -y^3
    RingPtr r = make_ring(1, 0);
    GroebnerBasis gb = buchberger(r, {parse_polynomial(r, "x1^2 - y1^2"),
                                      parse_polynomial(r, "x1*y1")});
    REQUIRE(gb.basis.size() == 3);
    // sorted ascending by leading monomial (degree first, so y1^3 comes last)
    CHECK(gb.basis[0] == parse_polynomial(r, "x1*y1"));
    CHECK(gb.basis[1] == parse_polynomial(r, "x1^2 - y1^2"));
    CHECK(gb.basis[2] == parse_polynomial(r, "y1^3"));
}

TEST_CASE("division algorithm invariant") {
    RingPtr r = make_ring(2, 0);
    Polynomial f = parse_polynomial(r, "x1^2*x2 + x1*y1^2 - y2^3 + x1");
    std::vector<Polynomial> divs = {parse_polynomial(r, "x1*x2 - y1"),
                                    parse_polynomial(r, "y1^2 - y2")};
    DivisionResult d = divide(f, divs);
    Polynomial recomposed = d.remainder;
    for (size_t i = 0; i < divs.size(); ++i) recomposed = recomposed + d.quotients[i] * divs[i];
    CHECK(recomposed == f);
    for (const Term& t : d.remainder.terms())
        for (const Polynomial& g : divs)
            CHECK(!g.leading_monomial().divides(t.monomial));
}

TEST_CASE("normal form and membership") {
    Graph g = cycle_graph(3);
    RingPtr r = make_ring(3, 0);
    GroebnerBasis gb = buchberger(build_ideal(IdealKind::parity, g, r));
    Polynomial in_ideal = parse_polynomial(r, "x1*x2 - y1*y2") * parse_polynomial(r, "y3^2") +
                          parse_polynomial(r, "x2*x3 - y2*y3");
    CHECK(membership(in_ideal, gb));
    CHECK(normal_form(in_ideal, gb).is_zero());
    CHECK(!membership(parse_polynomial(r, "x1"), gb));
    CHECK(normal_form(parse_polynomial(r, "x1"), gb) == parse_polynomial(r, "x1"));
}

TEST_CASE("reduced basis is deterministic and normalized") {
    Graph g = complete_graph(4);
    for (std::uint64_t p : {std::uint64_t{0}, std::uint64_t{32003}}) {
        RingPtr r = make_ring(4, p);
        IdealGenerators gens = build_ideal(IdealKind::parity, g, r);
        GroebnerBasis a = buchberger(gens), b = buchberger(gens);
        CHECK(a.basis == b.basis);
        for (size_t i = 0; i + 1 < a.basis.size(); ++i)
            CHECK(r->order.compare(a.basis[i].leading_monomial(),
                                   a.basis[i + 1].leading_monomial()) < 0);
        for (const Polynomial& f : a.basis) {
            CHECK(f == f.normalized());
            // auto-reduced: no tail term divisible by another leader
            for (const Polynomial& h : a.basis) {
                if (&h == &f) continue;
                for (const Term& t : f.terms())
                    CHECK(!h.leading_monomial().divides(t.monomial));
            }
        }
    }
}

TEST_CASE("ideal equality") {
    Graph g = cycle_graph(4);
    RingPtr r = make_ring(4, 0);
    IdealGenerators parity = build_ideal(IdealKind::parity, g, r);
    IdealGenerators shuffled = custom(r, {parity.gens[3], parity.gens[1],
                                          parity.gens[0] + parity.gens[2], parity.gens[2]});
    CHECK(ideal_equal(parity, shuffled));
    CHECK(!ideal_equal(parity, build_ideal(IdealKind::binomial, g, r)));
}

TEST_CASE("colon ideal by a polynomial") {
    // hand computation: (x1^2, x1*y1) : x1 = (x1, y1)
    RingPtr r = make_ring(1, 0);
    IdealGenerators i = custom(r, {parse_polynomial(r, "x1^2"),
                                   parse_polynomial(r, "x1*y1")});
    IdealGenerators q = colon_ideal(i, parse_polynomial(r, "x1"));
    CHECK(ideal_equal(q, custom(r, {parse_polynomial(r, "x1"),
                                    parse_polynomial(r, "y1")})));
    // colon by a unit leaves the ideal alone
    CHECK(ideal_equal(colon_ideal(i, parse_polynomial(r, "2")), i));
}

TEST_CASE("subring intersection recovers the induced subgraph ideal") {
    Graph g = cycle_graph(4);
    RingPtr r = make_ring(4, 0);
    IdealGenerators parity = build_ideal(IdealKind::parity, g, r);
    IdealGenerators restricted = intersect_subring(parity, {1, 2, 3});
    // induced edges on {1,2,3} are 12 and 23
    IdealGenerators expected = custom(r, {edge_polynomial(EdgePolyKind::gbar, 1, 2, r),
                                          edge_polynomial(EdgePolyKind::gbar, 2, 3, r)});
    CHECK(ideal_equal(restricted, expected));
    for (const Polynomial& f : restricted.gens)
        for (const Term& t : f.terms())
            for (int v : {3, 7})  // x4, y4
                CHECK(t.monomial.exponent(v) == 0);
}
