#include "pbei/ring.hpp"

#include <stdexcept>

namespace pbei {

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int v = 0; v < kMaxVars; ++v)
        r.e_[static_cast<size_t>(v)] =
            static_cast<std::uint8_t>(r.e_[static_cast<size_t>(v)] + o.e_[static_cast<size_t>(v)]);
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int v = 0; v < kMaxVars; ++v)
        if (e_[static_cast<size_t>(v)] > o.e_[static_cast<size_t>(v)]) return false;
    return true;
}

Monomial Monomial::quotient_by(const Monomial& o) const {
    Monomial r = *this;
    for (int v = 0; v < kMaxVars; ++v)
        r.e_[static_cast<size_t>(v)] =
            static_cast<std::uint8_t>(r.e_[static_cast<size_t>(v)] - o.e_[static_cast<size_t>(v)]);
    r.deg_ = deg_ - o.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int deg = 0;
    for (int v = 0; v < kMaxVars; ++v) {
        auto m = std::max(a.e_[static_cast<size_t>(v)], b.e_[static_cast<size_t>(v)]);
        r.e_[static_cast<size_t>(v)] = m;
        deg += m;
    }
    r.deg_ = deg;
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (int v = 0; v < kMaxVars; ++v)
        if (e_[static_cast<size_t>(v)] && o.e_[static_cast<size_t>(v)]) return false;
    return true;
}

namespace {

// degrevlex over the variables v with mask[v] true (mask empty = all);
// variable 0 has the highest priority.
int cmp_degrevlex(const Monomial& a, const Monomial& b, int nvars,
                  const std::vector<std::uint8_t>* mask, bool in_block) {
    int da = 0, db = 0;
    for (int v = 0; v < nvars; ++v) {
        if (mask && ((*mask)[static_cast<size_t>(v)] != 0) != in_block) continue;
        da += a.exponent(v);
        db += b.exponent(v);
    }
    if (da != db) return da < db ? -1 : 1;
    for (int v = nvars - 1; v >= 0; --v) {
        if (mask && ((*mask)[static_cast<size_t>(v)] != 0) != in_block) continue;
        int d = a.exponent(v) - b.exponent(v);
        if (d != 0) return d > 0 ? -1 : 1;  // revlex: larger exponent in last var loses
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (tag) {
        case OrderTag::degrevlex:
            return cmp_degrevlex(a, b, nvars, nullptr, false);
        case OrderTag::lex:
            for (int v = 0; v < nvars; ++v) {
                int d = a.exponent(v) - b.exponent(v);
                if (d != 0) return d > 0 ? 1 : -1;
            }
            return 0;
        case OrderTag::elim: {
            int c = cmp_degrevlex(a, b, nvars, &elim_block, true);
            if (c != 0) return c;
            return cmp_degrevlex(a, b, nvars, &elim_block, false);
        }
    }
    return 0;
}

std::string RingSpec::var_name(int v) const {
    if (v < n) return "x" + std::to_string(v + 1);
    if (v < 2 * n) return "y" + std::to_string(v - n + 1);
    return "t" + std::to_string(v - 2 * n + 1);
}

int RingSpec::var_index(const std::string& name) const {
    if (name.size() < 2) return -1;
    int idx;
    try {
        idx = std::stoi(name.substr(1));
    } catch (...) {
        return -1;
    }
    if (idx < 1) return -1;
    if (name[0] == 'x' && idx <= n) return idx - 1;
    if (name[0] == 'y' && idx <= n) return n + idx - 1;
    if (name[0] == 't' && idx <= extra_vars) return 2 * n + idx - 1;
    return -1;
}

RingPtr make_ring(int n, std::uint64_t characteristic, OrderTag order) {
    if (n < 1) throw std::invalid_argument("ring needs n >= 1");
    if (2 * n + 1 > Monomial::kMaxVars)
        throw std::invalid_argument("ring too large: 2n+1 exceeds monomial width");
    auto r = std::make_shared<RingSpec>();
    r->n = n;
    r->field = Field(characteristic);
    r->order.tag = order;
    r->order.nvars = 2 * n;
    return r;
}

RingPtr extend_ring_with_aux(const RingSpec& base) {
    auto r = std::make_shared<RingSpec>();
    r->n = base.n;
    r->extra_vars = base.extra_vars + 1;
    r->field = base.field;
    r->order.tag = OrderTag::elim;
    r->order.nvars = r->nvars();
    r->order.elim_block.assign(static_cast<size_t>(r->nvars()), 0);
    for (int v = 2 * base.n; v < r->nvars(); ++v)
        r->order.elim_block[static_cast<size_t>(v)] = 1;
    return r;
}

RingPtr elimination_ring(const RingSpec& base, const std::vector<int>& keep) {
    auto r = std::make_shared<RingSpec>();
    r->n = base.n;
    r->extra_vars = base.extra_vars;
    r->field = base.field;
    r->order.tag = OrderTag::elim;
    r->order.nvars = r->nvars();
    r->order.elim_block.assign(static_cast<size_t>(r->nvars()), 1);
    for (int i : keep) {
        if (i < 1 || i > base.n) throw std::invalid_argument("keep vertex out of range");
        r->order.elim_block[static_cast<size_t>(i - 1)] = 0;
        r->order.elim_block[static_cast<size_t>(base.n + i - 1)] = 0;
    }
    return r;
}

Monomial monomial_x(const RingSpec& r, int i) {
    if (i < 1 || i > r.n) throw std::invalid_argument("x index out of range");
    Monomial m;
    m.set_exponent(i - 1, 1);
    return m;
}

Monomial monomial_y(const RingSpec& r, int i) {
    if (i < 1 || i > r.n) throw std::invalid_argument("y index out of range");
    Monomial m;
    m.set_exponent(r.n + i - 1, 1);
    return m;
}

}  // namespace pbei
