#include "pbei/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pbei {

namespace {

// One reduction pass target: the reducer whose lead divides m, if any.
int find_reducer(const Monomial& m, const std::vector<Polynomial>& basis) {
    for (size_t k = 0; k < basis.size(); ++k)
        if (!basis[k].is_zero() && basis[k].leading_monomial().divides(m))
            return static_cast<int>(k);
    return -1;
}

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis) {
    const RingPtr& r = f.ring();
    const Field& k = r->field;
    Polynomial work = f;
    std::vector<Term> tail;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        int g = find_reducer(lt.monomial, basis);
        if (g < 0) {
            tail.push_back(lt);
            work = work.submul(lt.coeff, Monomial{}, Polynomial::from_term(r, lt.monomial, k.one()));
        } else {
            const Polynomial& gp = basis[static_cast<size_t>(g)];
            Coeff c = k.div(lt.coeff, gp.leading_term().coeff);
            work = work.submul(c, lt.monomial.quotient_by(gp.leading_monomial()), gp);
        }
    }
    return Polynomial(r, std::move(tail));
}

struct Pair {
    int i, j;
    Monomial lcm;
    int lcm_deg;
};

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    const RingPtr& r = f.ring();
    const Field& k = r->field;
    DivisionResult out;
    out.quotients.assign(divisors.size(), Polynomial(r));
    Polynomial work = f;
    std::vector<Term> tail;
    while (!work.is_zero()) {
        const Term lt = work.leading_term();
        int g = find_reducer(lt.monomial, divisors);
        if (g < 0) {
            tail.push_back(lt);
            work = work.submul(lt.coeff, Monomial{}, Polynomial::from_term(r, lt.monomial, k.one()));
        } else {
            const Polynomial& gp = divisors[static_cast<size_t>(g)];
            Coeff c = k.div(lt.coeff, gp.leading_term().coeff);
            Monomial q = lt.monomial.quotient_by(gp.leading_monomial());
            out.quotients[static_cast<size_t>(g)] =
                out.quotients[static_cast<size_t>(g)] + Polynomial::from_term(r, q, c);
            work = work.submul(c, q, gp);
        }
    }
    out.remainder = Polynomial(r, std::move(tail));
    return out;
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    const Field& k = ring->field;
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        if (!g.ring()->compatible(*ring)) throw std::invalid_argument("generator ring mismatch");
        if (!g.is_zero()) basis.push_back(g.normalized());
    }

    // pair bookkeeping: status 0 = pending, 1 = done (reduced or coprime-skipped)
    std::map<std::pair<int, int>, int> status;
    std::vector<Pair> queue;
    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[static_cast<size_t>(i)].leading_monomial(),
                                       basis[static_cast<size_t>(j)].leading_monomial());
            queue.push_back({i, j, l, l.degree()});
            status[{i, j}] = 0;
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(static_cast<int>(j));

    while (!queue.empty()) {
        // normal strategy: minimal lcm degree, ties by pair index
        size_t best = 0;
        for (size_t t = 1; t < queue.size(); ++t) {
            const Pair &a = queue[t], &b = queue[best];
            if (a.lcm_deg < b.lcm_deg ||
                (a.lcm_deg == b.lcm_deg && std::pair(a.i, a.j) < std::pair(b.i, b.j)))
                best = t;
        }
        Pair p = queue[best];
        queue.erase(queue.begin() + static_cast<long>(best));

        const Polynomial& fi = basis[static_cast<size_t>(p.i)];
        const Polynomial& fj = basis[static_cast<size_t>(p.j)];
        if (fi.leading_monomial().coprime(fj.leading_monomial())) {
            status[{p.i, p.j}] = 1;
            continue;  // first criterion
        }
        // second (chain) criterion: some basis element k with lm_k | lcm and
        // both flanking pairs already fully treated
        bool skip = false;
        for (size_t t = 0; t < basis.size() && !skip; ++t) {
            int ti = static_cast<int>(t);
            if (ti == p.i || ti == p.j) continue;
            if (!basis[t].leading_monomial().divides(p.lcm)) continue;
            auto s1 = status.find({std::min(p.i, ti), std::max(p.i, ti)});
            auto s2 = status.find({std::min(p.j, ti), std::max(p.j, ti)});
            if (s1 != status.end() && s1->second == 1 && s2 != status.end() && s2->second == 1)
                skip = true;
        }
        if (skip) continue;  // note: deliberately not marked done

        Monomial qi = p.lcm.quotient_by(fi.leading_monomial());
        Monomial qj = p.lcm.quotient_by(fj.leading_monomial());
        Polynomial spoly =
            Polynomial::from_term(ring, qi, k.inv(fi.leading_term().coeff)) * fi -
            Polynomial::from_term(ring, qj, k.inv(fj.leading_term().coeff)) * fj;
        Polynomial rem = reduce_full(spoly, basis);
        status[{p.i, p.j}] = 1;
        if (!rem.is_zero()) {
            basis.push_back(rem.normalized());
            push_pairs_for(static_cast<int>(basis.size()) - 1);
        }
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial &mi = basis[i].leading_monomial(), &mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail-reduce each against the others
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(reduce_full(minimal[i], others).normalized());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return {ring, std::move(reduced)};
}

GroebnerBasis buchberger(const IdealGenerators& gens) {
    return buchberger(gens.ring, gens.gens);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!f.ring()->compatible(*gb.ring))
        throw std::invalid_argument("normal_form: ring/order mismatch");
    return reduce_full(f, gb.basis);
}

bool membership(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

bool ideal_equal(const IdealGenerators& a, const IdealGenerators& b) {
    if (!a.ring->compatible(*b.ring)) throw std::invalid_argument("ideal_equal: ring mismatch");
    GroebnerBasis ga = buchberger(a), gbb = buchberger(b);
    for (const auto& g : a.gens)
        if (!membership(g, gbb)) return false;
    for (const auto& g : b.gens)
        if (!membership(g, ga)) return false;
    return true;
}

IdealGenerators colon_ideal(const IdealGenerators& i, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("colon by zero polynomial");
    const RingPtr& base = i.ring;
    RingPtr ext = extend_ring_with_aux(*base);
    const Field& k = ext->field;
    int tvar = ext->nvars() - 1;
    Monomial tm;
    tm.set_exponent(tvar, 1);
    Polynomial t = Polynomial::from_term(ext, tm, k.one());
    Polynomial one = Polynomial::constant(ext, k.one());

    std::vector<Polynomial> gens;
    for (const auto& g : i.gens) gens.push_back(t * g.in_ring(ext));
    gens.push_back((one - t) * f.in_ring(ext));
    GroebnerBasis gb = buchberger(ext, gens);

    IdealGenerators out;
    out.ring = base;
    out.kind = IdealKind::custom;
    for (const auto& g : gb.basis) {
        bool has_t = false;
        for (const auto& term : g.terms())
            if (term.monomial.exponent(tvar) > 0) has_t = true;
        if (has_t) continue;
        Polynomial h = g.in_ring(base);
        DivisionResult d = divide(h, {f});
        if (!d.remainder.is_zero())
            throw std::logic_error("colon_ideal: inexact division (internal error)");
        out.gens.push_back(d.quotients[0].normalized());
        out.tags.push_back({});
    }
    return out;
}

IdealGenerators intersect_subring(const IdealGenerators& i, const std::vector<int>& keep) {
    const RingPtr& base = i.ring;
    RingPtr elim = elimination_ring(*base, keep);
    std::vector<Polynomial> gens;
    for (const auto& g : i.gens) gens.push_back(g.in_ring(elim));
    GroebnerBasis gb = buchberger(elim, gens);
    std::vector<bool> kept(static_cast<size_t>(base->nvars()), false);
    for (int v : keep) {
        kept[static_cast<size_t>(v - 1)] = true;
        kept[static_cast<size_t>(base->n + v - 1)] = true;
    }
    IdealGenerators out;
    out.ring = base;
    out.kind = IdealKind::custom;
    for (const auto& g : gb.basis) {
        bool ok = true;
        for (const auto& term : g.terms())
            for (int v = 0; v < base->nvars() && ok; ++v)
                if (term.monomial.exponent(v) > 0 && !kept[static_cast<size_t>(v)]) ok = false;
        if (!ok) continue;
        out.gens.push_back(g.in_ring(base));
        out.tags.push_back({});
    }
    return out;
}

}  // namespace pbei
