#include "pbei/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbei {

std::string to_string(IdealKind k) {
    switch (k) {
        case IdealKind::parity: return "parity";
        case IdealKind::binomial: return "binomial";
        case IdealKind::lss: return "lss";
        case IdealKind::permanental: return "permanental";
        case IdealKind::custom: return "custom";
    }
    return "?";
}

IdealKind ideal_kind_from_string(const std::string& s) {
    if (s == "parity") return IdealKind::parity;
    if (s == "binomial") return IdealKind::binomial;
    if (s == "lss") return IdealKind::lss;
    if (s == "permanental") return IdealKind::permanental;
    if (s == "custom") return IdealKind::custom;
    throw std::invalid_argument("unknown ideal kind: " + s);
}

Polynomial edge_polynomial(EdgePolyKind kind, int i, int j, const RingPtr& ring) {
    if (i == j) throw std::invalid_argument("edge polynomial needs i != j");
    if (i > j) std::swap(i, j);
    if (i < 1 || j > ring->n) throw std::invalid_argument("edge endpoint out of range");
    const Field& f = ring->field;
    Monomial xi = monomial_x(*ring, i), xj = monomial_x(*ring, j);
    Monomial yi = monomial_y(*ring, i), yj = monomial_y(*ring, j);
    auto one = f.one();
    auto minus = f.neg(one);
    switch (kind) {
        case EdgePolyKind::f:
            return Polynomial(ring, {{xi * yj, one}, {xj * yi, minus}});
        case EdgePolyKind::g:
            return Polynomial(ring, {{xi * xj, one}, {yi * yj, one}});
        case EdgePolyKind::gbar:
            return Polynomial(ring, {{xi * xj, one}, {yi * yj, minus}});
        case EdgePolyKind::perm:
            return Polynomial(ring, {{xi * yj, one}, {xj * yi, one}});
    }
    throw std::logic_error("unreachable");
}

IdealGenerators build_ideal(IdealKind kind, const Graph& g, const RingPtr& ring) {
    if (ring->n != g.n())
        throw std::invalid_argument("ring has n=" + std::to_string(ring->n) + " but graph has n=" +
                                    std::to_string(g.n()));
    EdgePolyKind ek;
    switch (kind) {
        case IdealKind::parity: ek = EdgePolyKind::gbar; break;
        case IdealKind::binomial: ek = EdgePolyKind::f; break;
        case IdealKind::lss: ek = EdgePolyKind::g; break;
        case IdealKind::permanental: ek = EdgePolyKind::perm; break;
        default: throw std::invalid_argument("build_ideal needs a graph-ideal kind");
    }
    IdealGenerators out;
    out.ring = ring;
    out.kind = kind;
    for (auto [i, j] : g.edges()) {
        out.gens.push_back(edge_polynomial(ek, i, j, ring));
        out.tags.push_back({{i, j}, ek});
    }
    return out;
}

Polynomial apply_phi(const Polynomial& f, const Bipartition& bp) {
    const RingPtr& r = f.ring();
    std::vector<bool> seen(static_cast<size_t>(r->n) + 1, false);
    std::vector<bool> swap_var(static_cast<size_t>(r->n) + 1, false);
    for (int v : bp.side1) {
        if (v < 1 || v > r->n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("bipartition is not a partition of 1..n");
        seen[static_cast<size_t>(v)] = true;
    }
    for (int v : bp.side2) {
        if (v < 1 || v > r->n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("bipartition is not a partition of 1..n");
        seen[static_cast<size_t>(v)] = true;
        swap_var[static_cast<size_t>(v)] = true;
    }
    for (int v = 1; v <= r->n; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw std::invalid_argument("bipartition misses vertex " + std::to_string(v));
    // pure variable swap: permute exponents directly
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        Monomial m = t.monomial;
        for (int i = 1; i <= r->n; ++i) {
            if (!swap_var[static_cast<size_t>(i)]) continue;
            int ex = m.exponent(i - 1), ey = m.exponent(r->n + i - 1);
            m.set_exponent(i - 1, ey);
            m.set_exponent(r->n + i - 1, ex);
        }
        ts.push_back({m, t.coeff});
    }
    return Polynomial(r, std::move(ts));
}

IdealGenerators apply_phi(const IdealGenerators& gens, const Bipartition& bp) {
    IdealGenerators out;
    out.ring = gens.ring;
    out.kind = IdealKind::custom;
    out.tags = gens.tags;
    for (const auto& g : gens.gens) out.gens.push_back(apply_phi(g, bp));
    return out;
}

Polynomial apply_eta(const Polynomial& f) {
    const RingPtr& r = f.ring();
    if (r->field.characteristic() == 2)
        throw std::invalid_argument(
            "eta is not invertible in characteristic 2 (there I_G = L_G and Pi_G = J_G)");
    std::vector<Polynomial> images;
    const Field& k = r->field;
    for (int v = 0; v < r->nvars(); ++v) {
        if (v < r->n) {
            int i = v + 1;
            images.push_back(Polynomial(
                r, {{monomial_x(*r, i), k.one()}, {monomial_y(*r, i), k.one()}}));
        } else if (v < 2 * r->n) {
            int i = v - r->n + 1;
            images.push_back(Polynomial(
                r, {{monomial_x(*r, i), k.one()}, {monomial_y(*r, i), k.neg(k.one())}}));
        } else {
            Monomial m;
            m.set_exponent(v, 1);
            images.push_back(Polynomial::from_term(r, m, k.one()));
        }
    }
    return substitute(f, images);
}

IdealGenerators apply_eta(const IdealGenerators& gens) {
    IdealGenerators out;
    out.ring = gens.ring;
    out.kind = IdealKind::custom;
    out.tags = gens.tags;
    for (const auto& g : gens.gens) out.gens.push_back(apply_eta(g));
    return out;
}

IdealGenerators colon_generators_combinatorial(const Graph& g, std::pair<int, int> e,
                                               const RingPtr& ring) {
    auto [u, v] = e;
    if (!g.has_edge(u, v))
        throw std::invalid_argument("colon hypothesis violated: e is not an edge of G");
    if (bipartition(g).has_value())
        throw std::invalid_argument("colon hypothesis violated: G is bipartite");
    Graph ge = delete_edge(g, e);
    if (!bipartition(ge).has_value())
        throw std::invalid_argument("colon hypothesis violated: G\\e is not bipartite");

    IdealGenerators out = build_ideal(IdealKind::parity, ge, ring);
    out.kind = IdealKind::custom;
    auto add_pairs = [&](int w) {
        auto nb = ge.neighbors(w);
        for (size_t p = 0; p < nb.size(); ++p)
            for (size_t q = p + 1; q < nb.size(); ++q) {
                out.gens.push_back(edge_polynomial(EdgePolyKind::f, nb[p], nb[q], ring));
                out.tags.push_back({{std::min(nb[p], nb[q]), std::max(nb[p], nb[q])},
                                    EdgePolyKind::f});
            }
    };
    add_pairs(u);
    add_pairs(v);
    return out;
}

}  // namespace pbei
