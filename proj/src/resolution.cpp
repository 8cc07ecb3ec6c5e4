#include "pbei/resolution.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pbei {

// ---------------------------------------------------------------------------
// BettiTable

long BettiTable::get(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, long beta) {
    if (beta == 0)
        entries.erase({i, j});
    else
        entries[{i, j}] = beta;
}

int regularity(const BettiTable& t) {
    if (!t.complete)
        throw std::invalid_argument("regularity requires a complete Betti table");
    int reg = 0;
    for (const auto& [ij, b] : t.entries)
        if (b != 0) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

int projective_dimension(const BettiTable& t) {
    if (!t.complete)
        throw std::invalid_argument("projective_dimension requires a complete Betti table");
    int pd = 0;
    for (const auto& [ij, b] : t.entries)
        if (b != 0) pd = std::max(pd, ij.first);
    return pd;
}

bool is_pure(const BettiTable& t) {
    if (!t.complete) throw std::invalid_argument("is_pure requires a complete Betti table");
    int pd = projective_dimension(t);
    for (int i = 1; i <= pd; ++i) {
        int count = 0;
        for (const auto& [ij, b] : t.entries)
            if (ij.first == i && b != 0) ++count;
        if (count != 1) return false;
    }
    return true;
}

std::string BettiTable::diagram() const {
    int pd = 0, maxrow = 0;
    for (const auto& [ij, b] : entries)
        if (b != 0) {
            pd = std::max(pd, ij.first);
            maxrow = std::max(maxrow, ij.second - ij.first);
        }
    std::ostringstream os;
    os << "       ";
    for (int i = 0; i <= pd; ++i) os << i << "\t";
    os << "\n";
    std::vector<long> totals(static_cast<size_t>(pd) + 1, 0);
    for (const auto& [ij, b] : entries)
        if (ij.first <= pd) totals[static_cast<size_t>(ij.first)] += b;
    os << "total: ";
    for (long t : totals) os << t << "\t";
    os << "\n";
    for (int r = 0; r <= maxrow; ++r) {
        os << "    " << r << ": ";
        for (int i = 0; i <= pd; ++i) {
            long b = get(i, i + r);
            if (b == 0)
                os << ".\t";
            else
                os << b << "\t";
        }
        os << "\n";
    }
    if (!complete) os << "(partial table, degrees <= " << j_max << ")\n";
    return os.str();
}

std::string BettiTable::to_json() const {
    nlohmann::json j;
    j["entries"] = nlohmann::json::array();
    for (const auto& [ij, b] : entries)
        j["entries"].push_back({ij.first, ij.second, b});
    j["ring_vars"] = ring_vars;
    j["complete"] = complete;
    if (complete) {
        j["reg"] = regularity(*this);
        j["pd"] = projective_dimension(*this);
        j["pure"] = is_pure(*this);
    } else {
        j["j_max"] = j_max;
    }
    return j.dump();
}

BettiTable BettiTable::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BettiTable t;
    t.ring_vars = j.value("ring_vars", 0);
    t.complete = j.value("complete", true);
    t.j_max = j.value("j_max", -1);
    for (const auto& e : j.at("entries"))
        t.set(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long>());
    return t;
}

// ---------------------------------------------------------------------------
// Module elements for the Schreyer machinery

namespace {

struct MTerm {
    int comp;
    Monomial mon;
    Coeff coeff;
};

// Module term order. Schreyer tower order when omega/chains are given:
// compare flattened monomials in the ring order; on a tie compare the
// lead-component chains lexicographically from the bottom level up (smaller
// component = bigger term). Plain position-over-term otherwise.
struct ModOrder {
    const RingSpec* ring;
    const std::vector<Monomial>* omega = nullptr;
    const std::vector<std::vector<int>>* chains = nullptr;

    int compare(int ca, const Monomial& ma, int cb, const Monomial& mb) const {
        if (omega) {
            int c = ring->order.compare(ma * (*omega)[static_cast<size_t>(ca)],
                                        mb * (*omega)[static_cast<size_t>(cb)]);
            if (c != 0) return c;
            const auto& pa = (*chains)[static_cast<size_t>(ca)];
            const auto& pb = (*chains)[static_cast<size_t>(cb)];
            for (size_t t = 0; t < pa.size(); ++t) {
                if (pa[t] < pb[t]) return 1;
                if (pa[t] > pb[t]) return -1;
            }
            return 0;
        }
        if (ca != cb) return ca < cb ? 1 : -1;
        return ring->order.compare(ma, mb);
    }
};

struct VecPoly {
    std::vector<MTerm> terms;  // sorted descending under the ambient ModOrder
    bool is_zero() const { return terms.empty(); }
    const MTerm& lead() const { return terms.front(); }
};

void normalize_vec(VecPoly& v, const ModOrder& ord, const Field& f) {
    std::sort(v.terms.begin(), v.terms.end(), [&](const MTerm& a, const MTerm& b) {
        return ord.compare(a.comp, a.mon, b.comp, b.mon) > 0;
    });
    std::vector<MTerm> merged;
    for (auto& t : v.terms) {
        if (!merged.empty() && merged.back().comp == t.comp && merged.back().mon == t.mon)
            merged.back().coeff = f.add(merged.back().coeff, t.coeff);
        else
            merged.push_back(std::move(t));
    }
    v.terms.clear();
    for (auto& t : merged)
        if (!f.is_zero(t.coeff)) v.terms.push_back(std::move(t));
}

// v -= c * m * w
void vec_submul(VecPoly& v, const Coeff& c, const Monomial& m, const VecPoly& w,
                const ModOrder& ord, const Field& f) {
    Coeff nc = f.neg(c);
    std::vector<MTerm> out;
    out.reserve(v.terms.size() + w.terms.size());
    size_t i = 0, j = 0;
    while (i < v.terms.size() || j < w.terms.size()) {
        if (j >= w.terms.size()) {
            out.push_back(v.terms[i++]);
            continue;
        }
        Monomial mj = w.terms[j].mon * m;
        int cw = w.terms[j].comp;
        if (i >= v.terms.size()) {
            out.push_back({cw, mj, f.mul(w.terms[j].coeff, nc)});
            ++j;
            continue;
        }
        int cmp = ord.compare(v.terms[i].comp, v.terms[i].mon, cw, mj);
        if (cmp > 0) {
            out.push_back(v.terms[i++]);
        } else if (cmp < 0) {
            out.push_back({cw, mj, f.mul(w.terms[j].coeff, nc)});
            ++j;
        } else {
            Coeff s = f.add(v.terms[i].coeff, f.mul(w.terms[j].coeff, nc));
            if (!f.is_zero(s)) out.push_back({v.terms[i].comp, v.terms[i].mon, s});
            ++i;
            ++j;
        }
    }
    v.terms = std::move(out);
}

// Head-reduce v against cols until its lead has no reducer (or v = 0),
// accumulating quotient terms when `quotients` is given. Returns true when
// fully reduced to zero.
bool vec_reduce(VecPoly& v, const std::vector<VecPoly>& cols, const ModOrder& ord,
                const Field& f, std::vector<std::vector<std::pair<Monomial, Coeff>>>* quotients,
                VecPoly* tail_out,
                const std::vector<std::vector<int>>* by_comp = nullptr) {
    while (!v.is_zero()) {
        const MTerm& lt = v.lead();
        int red = -1;
        if (by_comp) {
            for (int c : (*by_comp)[static_cast<size_t>(lt.comp)])
                if (cols[static_cast<size_t>(c)].lead().mon.divides(lt.mon)) {
                    red = c;
                    break;
                }
        } else {
            for (size_t c = 0; c < cols.size(); ++c) {
                if (cols[c].is_zero()) continue;
                const MTerm& cl = cols[c].lead();
                if (cl.comp == lt.comp && cl.mon.divides(lt.mon)) {
                    red = static_cast<int>(c);
                    break;
                }
            }
        }
        if (red < 0) {
            if (!tail_out) return false;
            tail_out->terms.push_back(lt);
            VecPoly unit;
            unit.terms.push_back({lt.comp, lt.mon, f.one()});
            vec_submul(v, lt.coeff, Monomial{}, unit, ord, f);
            continue;
        }
        const VecPoly& g = cols[static_cast<size_t>(red)];
        Coeff c = f.div(lt.coeff, g.lead().coeff);
        Monomial q = lt.mon.quotient_by(g.lead().mon);
        if (quotients) (*quotients)[static_cast<size_t>(red)].push_back({q, c});
        vec_submul(v, c, q, g, ord, f);
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Schreyer resolution

namespace {

FreeResolutionStep columns_to_step(const RingPtr& ring, const std::vector<VecPoly>& cols,
                                   const std::vector<int>& row_degrees,
                                   const std::vector<int>& col_degrees) {
    FreeResolutionStep st;
    st.row_degrees = row_degrees;
    st.col_degrees = col_degrees;
    for (const auto& v : cols) {
        std::map<int, std::vector<Term>> rows;
        for (const auto& t : v.terms) rows[t.comp].push_back({t.mon, t.coeff});
        std::vector<std::pair<int, Polynomial>> col;
        for (auto& [r, ts] : rows) col.emplace_back(r, Polynomial(ring, std::move(ts)));
        st.columns.push_back(std::move(col));
    }
    return st;
}

}  // namespace

FreeResolution schreyer_resolution(const IdealGenerators& gens) {
    const RingPtr& ring = gens.ring;
    const Field& f = ring->field;
    FreeResolution res;
    res.ring = ring;
    GroebnerBasis gb = buchberger(gens);
    if (gb.basis.empty()) return res;  // zero ideal: 0 -> S -> S/0
    if (gb.basis.front().degree() == 0) {
        // unit ideal: S/I = 0; resolution 0 -> S -> S -> 0
        FreeResolutionStep st;
        st.row_degrees = {0};
        st.col_degrees = {0};
        st.columns.push_back({{0, gb.basis.front()}});
        res.steps.push_back(std::move(st));
        return res;
    }

    // level 1: columns are the reduced GB elements in F_0 = S
    std::vector<VecPoly> cols;
    std::vector<int> col_deg;
    std::vector<Monomial> omega_prev{Monomial{}};  // F_0
    std::vector<std::vector<int>> chains_prev{{0}};
    std::vector<int> row_deg{0};
    for (const auto& g : gb.basis) {
        VecPoly v;
        for (const auto& t : g.terms()) v.terms.push_back({0, t.monomial, t.coeff});
        cols.push_back(std::move(v));
        auto d = g.standard_degree();
        if (!d) throw std::invalid_argument("schreyer_resolution requires homogeneous generators");
        col_deg.push_back(*d);
    }

    while (true) {
        ModOrder ord{ring.get(), &omega_prev, &chains_prev};
        res.steps.push_back(columns_to_step(ring, cols, row_deg, col_deg));

        // omega and component chains for this level's free module
        std::vector<Monomial> omega(cols.size());
        std::vector<std::vector<int>> chains(cols.size());
        for (size_t c = 0; c < cols.size(); ++c) {
            int lc = cols[c].lead().comp;
            omega[c] = cols[c].lead().mon * omega_prev[static_cast<size_t>(lc)];
            chains[c] = chains_prev[static_cast<size_t>(lc)];
            chains[c].push_back(static_cast<int>(c));
        }

        // S-pair syzygies of the columns (they form a GB of their span)
        struct PairRec {
            int a, b, deg;
            Monomial lcm;
        };
        // bucket columns by leading component (used for pairing and reduction)
        std::vector<std::vector<int>> by_comp(omega_prev.size());
        for (size_t c = 0; c < cols.size(); ++c)
            by_comp[static_cast<size_t>(cols[c].lead().comp)].push_back(static_cast<int>(c));

        std::vector<PairRec> pairs;
        for (size_t a = 0; a < cols.size(); ++a) {
            // leads of the syzygies on e_a are lcm(lm_a, lm_b)/lm_a for b > a;
            // only pairs realizing minimal generators of that monomial ideal
            // are needed (the rest have divisible leads).
            std::vector<std::pair<Monomial, int>> cand;
            for (int b : by_comp[static_cast<size_t>(cols[a].lead().comp)]) {
                if (static_cast<size_t>(b) <= a) continue;
                Monomial l = Monomial::lcm(cols[a].lead().mon,
                                           cols[static_cast<size_t>(b)].lead().mon);
                cand.emplace_back(l.quotient_by(cols[a].lead().mon), b);
            }
            for (size_t s = 0; s < cand.size(); ++s) {
                bool redundant = false;
                for (size_t t = 0; t < cand.size() && !redundant; ++t) {
                    if (t == s) continue;
                    if (cand[t].first.divides(cand[s].first) &&
                        (!(cand[t].first == cand[s].first) || t < s))
                        redundant = true;
                }
                if (redundant) continue;
                Monomial l = cand[s].first * cols[a].lead().mon;
                pairs.push_back({static_cast<int>(a), cand[s].second,
                                 cand[s].first.degree() + col_deg[a], l});
            }
        }
        if (pairs.empty()) break;
        std::sort(pairs.begin(), pairs.end(), [](const PairRec& x, const PairRec& y) {
            return std::tuple(x.deg, x.a, x.b) < std::tuple(y.deg, y.a, y.b);
        });

        std::vector<VecPoly> next_cols;
        std::vector<int> next_deg;
        for (const auto& p : pairs) {
            const VecPoly &va = cols[static_cast<size_t>(p.a)], &vb = cols[static_cast<size_t>(p.b)];
            Monomial ua = p.lcm.quotient_by(va.lead().mon);
            Monomial ub = p.lcm.quotient_by(vb.lead().mon);
            Coeff ia = f.inv(va.lead().coeff), ib = f.inv(vb.lead().coeff);
            {
                VecPoly sp;  // = ia*ua*va - ib*ub*vb, in F_{k-1} coords
                vec_submul(sp, f.neg(ia), ua, va, ord, f);
                vec_submul(sp, ib, ub, vb, ord, f);
                std::vector<std::vector<std::pair<Monomial, Coeff>>> quot(cols.size());
                if (!vec_reduce(sp, cols, ord, f, &quot, nullptr, &by_comp))
                    throw std::logic_error("schreyer: S-pair did not reduce to zero (level " +
                                           std::to_string(res.steps.size()) + ", stuck lead comp " +
                                           std::to_string(sp.lead().comp) + ")");
                // syzygy = ia*ua*e_a - ib*ub*e_b - sum quot_c e_c, in F_k coords
                VecPoly syz;
                syz.terms.push_back({p.a, ua, ia});
                syz.terms.push_back({p.b, ub, f.neg(ib)});
                for (size_t c = 0; c < quot.size(); ++c)
                    for (const auto& [qm, qc] : quot[c])
                        syz.terms.push_back({static_cast<int>(c), qm, f.neg(qc)});
                ModOrder next_ord{ring.get(), &omega, &chains};
                normalize_vec(syz, next_ord, f);
                next_cols.push_back(std::move(syz));
                next_deg.push_back(p.deg);
            }
        }
        row_deg = col_deg;
        col_deg = std::move(next_deg);
        cols = std::move(next_cols);
        omega_prev = std::move(omega);
        chains_prev = std::move(chains);
        if (res.steps.size() > static_cast<size_t>(2 * ring->nvars()) + 2)
            throw std::logic_error("schreyer: resolution exceeds Hilbert syzygy bound");
    }
    return res;
}

// ---------------------------------------------------------------------------
// Public syzygies of an arbitrary presentation (augmented POT method)

FreeResolutionStep syzygies(const RingPtr& ring, const FreeResolutionStep& presentation) {
    const Field& f = ring->field;
    int r = static_cast<int>(presentation.row_degrees.size());
    int k = static_cast<int>(presentation.col_degrees.size());
    ModOrder ord{ring.get(), nullptr};  // POT over r + k components

    std::vector<VecPoly> basis;
    for (int c = 0; c < k; ++c) {
        VecPoly v;
        for (const auto& [row, poly] : presentation.columns[static_cast<size_t>(c)])
            for (const auto& t : poly.terms()) v.terms.push_back({row, t.monomial, t.coeff});
        v.terms.push_back({r + c, Monomial{}, f.one()});
        normalize_vec(v, ord, f);
        basis.push_back(std::move(v));
    }

    // module Buchberger, no pair criteria
    std::vector<std::pair<int, int>> queue;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i)
            if (basis[static_cast<size_t>(i)].lead().comp == basis[static_cast<size_t>(j)].lead().comp)
                queue.emplace_back(i, j);
    };
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs(j);
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.erase(queue.begin());
        const VecPoly &va = basis[static_cast<size_t>(a)], &vb = basis[static_cast<size_t>(b)];
        if (va.lead().comp != vb.lead().comp) continue;
        Monomial l = Monomial::lcm(va.lead().mon, vb.lead().mon);
        VecPoly sp;
        vec_submul(sp, f.neg(f.inv(va.lead().coeff)), l.quotient_by(va.lead().mon), va, ord, f);
        vec_submul(sp, f.inv(vb.lead().coeff), l.quotient_by(vb.lead().mon), vb, ord, f);
        VecPoly tail;
        vec_reduce(sp, basis, ord, f, nullptr, &tail);
        if (!tail.is_zero()) {
            basis.push_back(tail);
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // elements supported entirely on the auxiliary components are syzygies
    std::vector<VecPoly> syz;
    for (const auto& v : basis) {
        bool aux_only = true;
        for (const auto& t : v.terms)
            if (t.comp < r) aux_only = false;
        if (aux_only && !v.is_zero()) syz.push_back(v);
    }
    // auto-reduce: drop elements whose lead is divisible by another's lead
    std::vector<VecPoly> minimal;
    for (size_t i = 0; i < syz.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < syz.size(); ++j) {
            if (i == j) continue;
            if (syz[j].lead().comp == syz[i].lead().comp &&
                syz[j].lead().mon.divides(syz[i].lead().mon) &&
                (!(syz[j].lead().mon == syz[i].lead().mon) || j < i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(syz[i]);
    }

    FreeResolutionStep out;
    out.row_degrees = presentation.col_degrees;
    for (const auto& v : minimal) {
        std::map<int, std::vector<Term>> rows;
        int deg = -1;
        for (const auto& t : v.terms) {
            rows[t.comp - r].push_back({t.mon, t.coeff});
            int d = t.mon.degree() + presentation.col_degrees[static_cast<size_t>(t.comp - r)];
            if (deg < 0) deg = d;
        }
        std::vector<std::pair<int, Polynomial>> col;
        for (auto& [row, ts] : rows) col.emplace_back(row, Polynomial(ring, std::move(ts)));
        out.columns.push_back(std::move(col));
        out.col_degrees.push_back(deg);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Minimalization

void minimalize(FreeResolution& res) {
    const Field& f = res.ring->field;
    size_t levels = res.steps.size();
    if (levels == 0) return;

    // alive flags for the basis elements of F_0 .. F_levels; cancellations
    // never create new degree-0 entries outside the step being processed
    // (all entries are homogeneous, so constant positions are fixed by the
    // grading), hence one pass over the steps suffices
    std::vector<std::vector<char>> alive(levels + 1);
    alive[0].assign(res.steps[0].row_degrees.size(), 1);
    for (size_t k = 0; k < levels; ++k)
        alive[k + 1].assign(res.steps[k].col_degrees.size(), 1);

    for (size_t k = 0; k < levels; ++k) {
        FreeResolutionStep& st = res.steps[k];
        std::vector<std::pair<int, int>> work;  // candidate (row, col) constants
        for (size_t j = 0; j < st.columns.size(); ++j)
            for (const auto& [i, p] : st.columns[j])
                if (p.degree() == 0) work.emplace_back(i, static_cast<int>(j));
        while (!work.empty()) {
            auto [row, col] = work.back();
            work.pop_back();
            if (!alive[k][static_cast<size_t>(row)] ||
                !alive[k + 1][static_cast<size_t>(col)])
                continue;
            const Polynomial* pivot = nullptr;
            for (const auto& [r, p] : st.columns[static_cast<size_t>(col)])
                if (r == row) pivot = &p;
            if (!pivot || pivot->is_zero() || pivot->degree() != 0) continue;
            Coeff cinv = f.inv(pivot->terms().front().coeff);

            auto pivot_col = st.columns[static_cast<size_t>(col)];  // copy: source of merges
            alive[k][static_cast<size_t>(row)] = 0;
            alive[k + 1][static_cast<size_t>(col)] = 0;
            for (size_t j2 = 0; j2 < st.columns.size(); ++j2) {
                if (!alive[k + 1][j2]) continue;
                const Polynomial* a = nullptr;
                for (const auto& [r, p] : st.columns[j2])
                    if (r == row) a = &p;
                if (!a || a->is_zero()) continue;
                Polynomial factor = a->scaled(cinv);
                // column update: col_{j2} -= factor * pivot_col (merged by row)
                std::vector<std::pair<int, Polynomial>> merged;
                auto& cur = st.columns[j2];
                size_t x = 0, y = 0;
                while (x < cur.size() || y < pivot_col.size()) {
                    int rx = x < cur.size() ? cur[x].first : INT32_MAX;
                    int ry = y < pivot_col.size() ? pivot_col[y].first : INT32_MAX;
                    if (rx < ry) {
                        if (alive[k][static_cast<size_t>(rx)]) merged.push_back(std::move(cur[x]));
                        ++x;
                    } else if (ry < rx) {
                        if (alive[k][static_cast<size_t>(ry)]) {
                            Polynomial v = -(factor * pivot_col[y].second);
                            if (!v.is_zero()) {
                                if (v.degree() == 0) work.emplace_back(ry, static_cast<int>(j2));
                                merged.emplace_back(ry, std::move(v));
                            }
                        }
                        ++y;
                    } else {
                        if (alive[k][static_cast<size_t>(rx)]) {
                            Polynomial v = cur[x].second - factor * pivot_col[y].second;
                            if (!v.is_zero()) {
                                if (v.degree() == 0) work.emplace_back(rx, static_cast<int>(j2));
                                merged.emplace_back(rx, std::move(v));
                            }
                        }
                        ++x;
                        ++y;
                    }
                }
                cur = std::move(merged);
            }
        }
    }

    // compact every level according to the alive flags
    std::vector<std::vector<int>> remap(levels + 1);
    for (size_t k = 0; k <= levels; ++k) {
        remap[k].assign(alive[k].size(), -1);
        int next = 0;
        for (size_t i = 0; i < alive[k].size(); ++i)
            if (alive[k][i]) remap[k][i] = next++;
    }
    for (size_t k = 0; k < levels; ++k) {
        FreeResolutionStep& st = res.steps[k];
        std::vector<int> rd, cd;
        for (size_t i = 0; i < st.row_degrees.size(); ++i)
            if (alive[k][i]) rd.push_back(st.row_degrees[i]);
        std::vector<std::vector<std::pair<int, Polynomial>>> cols;
        for (size_t j = 0; j < st.columns.size(); ++j) {
            if (!alive[k + 1][j]) continue;
            cd.push_back(st.col_degrees[j]);
            std::vector<std::pair<int, Polynomial>> col;
            for (auto& [r, p] : st.columns[j])
                if (alive[k][static_cast<size_t>(r)])
                    col.emplace_back(remap[k][static_cast<size_t>(r)], std::move(p));
            cols.push_back(std::move(col));
        }
        st.row_degrees = std::move(rd);
        st.col_degrees = std::move(cd);
        st.columns = std::move(cols);
    }
    while (!res.steps.empty() && res.steps.back().columns.empty()) res.steps.pop_back();
}

bool composes_to_zero(const FreeResolution& res) {
    for (size_t k = 0; k + 1 < res.steps.size(); ++k) {
        const FreeResolutionStep& a = res.steps[k];      // F_{k+1} -> F_k
        const FreeResolutionStep& b = res.steps[k + 1];  // F_{k+2} -> F_{k+1}
        for (const auto& col : b.columns) {
            std::map<int, Polynomial> acc;
            for (const auto& [r, p] : col)
                for (const auto& [r2, q] : a.columns[static_cast<size_t>(r)]) {
                    auto it = acc.find(r2);
                    if (it == acc.end())
                        acc.emplace(r2, q * p);
                    else
                        it->second = it->second + q * p;
                }
            for (const auto& [r2, v] : acc)
                if (!v.is_zero()) return false;
        }
    }
    return true;
}

bool is_minimal(const FreeResolution& res) {
    for (const auto& st : res.steps)
        for (const auto& col : st.columns)
            for (const auto& [r, p] : col)
                if (!p.is_zero() && p.degree() == 0) return false;
    return true;
}

BettiTable betti_table_schreyer(const IdealGenerators& gens, FreeResolution* minimal_out) {
    FreeResolution res = schreyer_resolution(gens);
    minimalize(res);
    BettiTable t;
    t.ring_vars = gens.ring->nvars();
    t.complete = true;
    // F_0
    if (res.steps.empty()) {
        // either the zero ideal (S itself) or the unit ideal (zero module)
        bool any_nonzero = false;
        for (const auto& g : gens.gens)
            if (!g.is_zero()) any_nonzero = true;
        if (!any_nonzero) t.set(0, 0, 1);
    } else {
        for (int d : res.steps[0].row_degrees) {
            t.set(0, d, t.get(0, d) + 1);
        }
        for (size_t k = 0; k < res.steps.size(); ++k)
            for (int d : res.steps[k].col_degrees)
                t.set(static_cast<int>(k) + 1, d, t.get(static_cast<int>(k) + 1, d) + 1);
    }
    if (minimal_out) *minimal_out = std::move(res);
    return t;
}

// ---------------------------------------------------------------------------
// Koszul-strand oracle

namespace {

// normal (standard) monomials of the initial ideal, by total degree
void enumerate_normal(const RingPtr& ring, const std::vector<Monomial>& leads, int dmax,
                      std::vector<std::vector<Monomial>>& by_degree) {
    int nv = ring->nvars();
    by_degree.assign(static_cast<size_t>(dmax) + 1, {});
    Monomial cur;
    std::function<void(int, int)> rec = [&](int var, int deg_left) {
        for (const auto& l : leads)
            if (l.divides(cur)) return;
        by_degree[static_cast<size_t>(cur.degree())].push_back(cur);
        for (int v = var; v < nv; ++v) {
            if (deg_left == 0) break;
            cur.set_exponent(v, cur.exponent(v) + 1);
            rec(v, deg_left - 1);
            cur.set_exponent(v, cur.exponent(v) - 1);
        }
    };
    rec(0, dmax);
    // note: duplicates cannot arise (each monomial built along one path)
}

long rank_fp(const Field& f, std::vector<std::vector<Coeff>>& m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    long rank = 0;
    size_t prow = 0;
    for (size_t c = 0; c < cols && prow < rows; ++c) {
        size_t piv = prow;
        while (piv < rows && f.is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(m[prow], m[piv]);
        Coeff inv = f.inv(m[prow][c]);
        for (size_t r = prow + 1; r < rows; ++r) {
            if (f.is_zero(m[r][c])) continue;
            Coeff factor = f.mul(m[r][c], inv);
            for (size_t c2 = c; c2 < cols; ++c2)
                m[r][c2] = f.sub(m[r][c2], f.mul(factor, m[prow][c2]));
        }
        ++prow;
        ++rank;
    }
    return rank;
}

// fraction-free Bareiss elimination over the integers
long rank_bareiss(std::vector<std::vector<mpz_class>>& a) {
    size_t rows = a.size();
    if (rows == 0) return 0;
    size_t cols = a[0].size();
    long rank = 0;
    size_t prow = 0;
    mpz_class prev = 1;
    for (size_t c = 0; c < cols && prow < rows; ++c) {
        size_t piv = prow;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[prow], a[piv]);
        for (size_t r = prow + 1; r < rows; ++r) {
            for (size_t c2 = c + 1; c2 < cols; ++c2) {
                mpz_class num = a[prow][c] * a[r][c2] - a[r][c] * a[prow][c2];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[r][c2] = q;
            }
            a[r][c] = 0;
        }
        prev = a[prow][c];
        ++prow;
        ++rank;
    }
    return rank;
}

long matrix_rank(const Field& f, std::vector<std::vector<Coeff>>& m) {
    if (f.characteristic() != 0) return rank_fp(f, m);
    std::vector<std::vector<mpz_class>> a;
    a.reserve(m.size());
    for (const auto& row : m) {
        mpz_class den = 1;
        for (const auto& c : row) den = lcm(den, c.rational().get_den());
        std::vector<mpz_class> r;
        r.reserve(row.size());
        for (const auto& c : row)
            r.push_back(mpz_class(c.rational().get_num() * (den / c.rational().get_den())));
        a.push_back(std::move(r));
    }
    return rank_bareiss(a);
}

std::vector<int> multidegree_of(const RingPtr& ring, const Monomial& m, std::uint32_t tmask) {
    int n = ring->n;
    std::vector<int> a(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        a[static_cast<size_t>(i)] = m.exponent(i) + m.exponent(n + i);
    std::uint32_t w = tmask;
    while (w) {
        int v = std::countr_zero(w);
        w &= w - 1;
        a[static_cast<size_t>(v % n)] += 1;
    }
    return a;
}

}  // namespace

std::vector<long> hilbert_function(const GroebnerBasis& gb, int dmax) {
    std::vector<Monomial> leads;
    for (const auto& g : gb.basis) leads.push_back(g.leading_monomial());
    std::vector<std::vector<Monomial>> by_degree;
    enumerate_normal(gb.ring, leads, dmax, by_degree);
    std::vector<long> hf;
    for (const auto& v : by_degree) hf.push_back(static_cast<long>(v.size()));
    return hf;
}

BettiTable betti_table_koszul(const IdealGenerators& gens, int j_max,
                              std::map<std::pair<int, std::vector<int>>, long>* multigraded_out) {
    if (j_max < 2) throw std::invalid_argument("betti_table_koszul needs j_max >= 2");
    const RingPtr& ring = gens.ring;
    if (ring->extra_vars != 0)
        throw std::invalid_argument("koszul oracle requires the plain 2n-variable ring");
    const Field& f = ring->field;
    int nv = ring->nvars();
    GroebnerBasis gb = buchberger(gens);
    std::vector<Monomial> leads;
    for (const auto& g : gb.basis) leads.push_back(g.leading_monomial());

    std::vector<std::vector<Monomial>> normal;
    enumerate_normal(ring, leads, j_max, normal);

    BettiTable t;
    t.ring_vars = nv;
    t.complete = false;
    t.j_max = j_max;

    // cache of NF(x_v * m) expanded in terms
    std::map<std::pair<int, std::array<std::uint8_t, Monomial::kMaxVars>>,
             std::vector<std::pair<Monomial, Coeff>>>
        nf_cache;
    auto mult_nf = [&](int v, const Monomial& m) -> const std::vector<std::pair<Monomial, Coeff>>& {
        auto key = std::make_pair(v, m.raw());
        auto it = nf_cache.find(key);
        if (it != nf_cache.end()) return it->second;
        Monomial xm = m;
        xm.set_exponent(v, xm.exponent(v) + 1);
        Polynomial p = Polynomial::from_term(ring, xm, f.one());
        Polynomial nf = normal_form(p, gb);
        std::vector<std::pair<Monomial, Coeff>> out;
        for (const auto& tm : nf.terms()) out.emplace_back(tm.monomial, tm.coeff);
        return nf_cache.emplace(std::move(key), std::move(out)).first->second;
    };

    for (int j = 0; j <= j_max; ++j) {
        // bases per homological degree p, bucketed by multidegree
        struct Basis {
            // bucket -> list of (subset mask, normal monomial)
            std::map<std::vector<int>, std::vector<std::pair<std::uint32_t, Monomial>>> buckets;
            // (mask, monomial raw) -> index within its bucket
            std::map<std::pair<std::uint32_t, std::array<std::uint8_t, Monomial::kMaxVars>>, int>
                index;
        };
        int pmax = std::min(nv, j);
        std::vector<Basis> basis(static_cast<size_t>(pmax) + 2);
        for (int p = 0; p <= pmax; ++p) {
            int md = j - p;
            if (md < 0 || md > j_max) continue;
            // iterate subsets of size p via combinations
            std::vector<int> comb(static_cast<size_t>(p));
            std::function<void(int, int, std::uint32_t)> rec = [&](int start, int left,
                                                                   std::uint32_t mask) {
                if (left == 0) {
                    for (const auto& m : normal[static_cast<size_t>(md)]) {
                        auto a = multidegree_of(ring, m, mask);
                        auto& bucket = basis[static_cast<size_t>(p)].buckets[a];
                        basis[static_cast<size_t>(p)].index[{mask, m.raw()}] =
                            static_cast<int>(bucket.size());
                        bucket.emplace_back(mask, m);
                    }
                    return;
                }
                for (int v = start; v <= nv - left; ++v) rec(v + 1, left - 1, mask | (1u << v));
            };
            rec(0, p, 0);
        }

        // ranks of d_p : C_p -> C_{p-1} per bucket
        std::vector<std::map<std::vector<int>, long>> rank_p(static_cast<size_t>(pmax) + 2);
        for (int p = 1; p <= pmax; ++p) {
            for (auto& [a, elems] : basis[static_cast<size_t>(p)].buckets) {
                auto itlow = basis[static_cast<size_t>(p) - 1].buckets.find(a);
                if (itlow == basis[static_cast<size_t>(p) - 1].buckets.end()) {
                    rank_p[static_cast<size_t>(p)][a] = 0;
                    continue;
                }
                size_t rows = itlow->second.size();
                std::vector<std::vector<Coeff>> mat(rows,
                                                    std::vector<Coeff>(elems.size(), f.zero()));
                for (size_t col = 0; col < elems.size(); ++col) {
                    auto [mask, m] = elems[col];
                    int pos = 0;
                    std::uint32_t w = mask;
                    while (w) {
                        int v = std::countr_zero(w);
                        w &= w - 1;
                        std::uint32_t rest = mask & ~(1u << v);
                        Coeff sign = (pos % 2 == 0) ? f.one() : f.neg(f.one());
                        for (const auto& [mon, c] : mult_nf(v, m)) {
                            auto idx = basis[static_cast<size_t>(p) - 1].index.find(
                                {rest, mon.raw()});
                            if (idx == basis[static_cast<size_t>(p) - 1].index.end())
                                throw std::logic_error("koszul: target basis element missing");
                            mat[static_cast<size_t>(idx->second)][col] =
                                f.add(mat[static_cast<size_t>(idx->second)][col],
                                      f.mul(sign, c));
                        }
                        ++pos;
                    }
                }
                rank_p[static_cast<size_t>(p)][a] = matrix_rank(f, mat);
            }
        }

        for (int p = 0; p <= pmax; ++p) {
            long beta = 0;
            for (auto& [a, elems] : basis[static_cast<size_t>(p)].buckets) {
                long dim = static_cast<long>(elems.size());
                long rp = 0, rnext = 0;
                auto it = rank_p[static_cast<size_t>(p)].find(a);
                if (p >= 1 && it != rank_p[static_cast<size_t>(p)].end()) rp = it->second;
                if (p + 1 <= pmax) {
                    auto it2 = rank_p[static_cast<size_t>(p) + 1].find(a);
                    if (it2 != rank_p[static_cast<size_t>(p) + 1].end()) rnext = it2->second;
                }
                long h = dim - rp - rnext;
                beta += h;
                if (multigraded_out && h != 0) (*multigraded_out)[{p, a}] += h;
            }
            if (beta != 0) t.set(p, j, beta);
        }
    }
    return t;
}

}  // namespace pbei
