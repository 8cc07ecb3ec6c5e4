#include "pbei/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pbei {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize_terms();
}

void Polynomial::normalize_terms() {
    const auto& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.monomial, b.monomial) > 0; });
    std::vector<Term> merged;
    const Field& f = ring_->field;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().monomial == t.monomial)
            merged.back().coeff = f.add(merged.back().coeff, t.coeff);
        else
            merged.push_back(std::move(t));
    }
    terms_.clear();
    for (auto& t : merged)
        if (!f.is_zero(t.coeff)) terms_.push_back(std::move(t));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring() || !b.ring() || !a.ring()->compatible(*b.ring()))
        throw std::invalid_argument("ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(*this, o);
    std::vector<Term> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = ring_->field.neg(t.coeff);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(*this, o);
    std::vector<Term> ts;
    ts.reserve(terms_.size() * o.terms_.size());
    const Field& f = ring_->field;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            ts.push_back({a.monomial * b.monomial, f.mul(a.coeff, b.coeff)});
    return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::scaled(const Coeff& c) const {
    const Field& f = ring_->field;
    if (f.is_zero(c)) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = f.mul(t.coeff, c);
    return r;
}

Polynomial Polynomial::submul(const Coeff& c, const Monomial& m, const Polynomial& o) const {
    const Field& f = ring_->field;
    // merge of two sorted sequences; o's terms shifted by m and scaled by -c
    const auto& ord = ring_->order;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    Coeff nc = f.neg(c);
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j >= o.terms_.size()) {
            out.push_back(terms_[i++]);
            continue;
        }
        Monomial mj = o.terms_[j].monomial * m;
        if (i >= terms_.size()) {
            out.push_back({mj, f.mul(o.terms_[j].coeff, nc)});
            ++j;
            continue;
        }
        int cmp = ord.compare(terms_[i].monomial, mj);
        if (cmp > 0) {
            out.push_back(terms_[i++]);
        } else if (cmp < 0) {
            out.push_back({mj, f.mul(o.terms_[j].coeff, nc)});
            ++j;
        } else {
            Coeff s = f.add(terms_[i].coeff, f.mul(o.terms_[j].coeff, nc));
            if (!f.is_zero(s)) out.push_back({terms_[i].monomial, s});
            ++i;
            ++j;
        }
    }
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].monomial == o.terms_[i].monomial) ||
            !(terms_[i].coeff == o.terms_[i].coeff))
            return false;
    return true;
}

std::optional<std::vector<int>> Polynomial::multidegree() const {
    if (terms_.empty()) return std::nullopt;
    int n = ring_->n;
    auto mdeg = [&](const Monomial& m) {
        std::vector<int> d(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = m.exponent(i) + m.exponent(n + i);
        return d;
    };
    auto first = mdeg(terms_[0].monomial);
    for (size_t i = 1; i < terms_.size(); ++i)
        if (mdeg(terms_[i].monomial) != first) return std::nullopt;
    return first;
}

std::optional<int> Polynomial::standard_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_[0].monomial.degree();
    for (const auto& t : terms_)
        if (t.monomial.degree() != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::normalized() const {
    if (terms_.empty()) return *this;
    const Field& f = ring_->field;
    if (ring_->field.characteristic() != 0) return scaled(f.inv(terms_[0].coeff));
    // char 0: clear denominators, divide by content, positive leading coeff
    mpz_class den = 1;
    for (const auto& t : terms_) den = lcm(den, t.coeff.rational().get_den());
    mpz_class content = 0;
    for (const auto& t : terms_) {
        mpz_class num = t.coeff.rational().get_num() * (den / t.coeff.rational().get_den());
        content = gcd(content, num);
    }
    mpq_class scale(den, content);
    scale.canonicalize();
    if (terms_[0].coeff.rational() < 0) scale = -scale;
    return scaled(Coeff(scale));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const Field& f = ring_->field;
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string cs = f.to_string(t.coeff);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool need_sep = false;
        if (cs != "1" || t.monomial.is_one()) {
            os << cs;
            need_sep = true;
        }
        for (int v = 0; v < ring_->nvars(); ++v) {
            int e = t.monomial.exponent(v);
            if (e == 0) continue;
            if (need_sep) os << "*";
            need_sep = true;
            os << ring_->var_name(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

Polynomial Polynomial::in_ring(const RingPtr& r) const {
    if (r->n != ring_->n) throw std::invalid_argument("in_ring: vertex count mismatch");
    if (!(r->field == ring_->field)) throw std::invalid_argument("in_ring: field mismatch");
    Polynomial out(r);
    std::vector<Term> ts = terms_;
    for (const auto& t : ts)
        for (int v = r->nvars(); v < Monomial::kMaxVars; ++v)
            if (t.monomial.exponent(v) != 0)
                throw std::invalid_argument("in_ring: term uses variable outside target ring");
    return Polynomial(r, std::move(ts));
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
    bool z = ring->field.is_zero(c);
    if (z) return Polynomial(std::move(ring));
    return Polynomial(std::move(ring), {{Monomial{}, c}});
}

Polynomial Polynomial::from_term(RingPtr ring, const Monomial& m, const Coeff& c) {
    bool z = ring->field.is_zero(c);
    if (z) return Polynomial(std::move(ring));
    return Polynomial(std::move(ring), {{m, c}});
}

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    std::vector<Term> terms;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        int sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(pos));
        }
        first = false;
        skip_ws();
        mpq_class coeff = 1;
        Monomial m;
        bool any_factor = false;
        while (true) {
            skip_ws();
            if (any_factor) {
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    skip_ws();
                } else {
                    break;
                }
            }
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                    ++pos;
                mpq_class c(text.substr(start, pos - start));
                c.canonicalize();
                coeff *= c;
            } else if (pos < text.size() &&
                       (text[pos] == 'x' || text[pos] == 'y' || text[pos] == 't')) {
                size_t start = pos;
                ++pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                std::string name = text.substr(start, pos - start);
                int v = ring->var_index(name);
                if (v < 0) throw std::invalid_argument("unknown variable " + name);
                int e = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    size_t es = pos;
                    while (pos < text.size() &&
                           std::isdigit(static_cast<unsigned char>(text[pos])))
                        ++pos;
                    e = std::stoi(text.substr(es, pos - es));
                }
                m.set_exponent(v, m.exponent(v) + e);
            } else {
                if (!any_factor) throw std::invalid_argument("empty term in polynomial text");
                break;
            }
            any_factor = true;
        }
        if (!any_factor) throw std::invalid_argument("empty term in polynomial text");
        if (sign < 0) coeff = -coeff;
        terms.push_back({m, ring->field.from_rational(coeff)});
        skip_ws();
    }
    return Polynomial(ring, std::move(terms));
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
    const RingPtr& r = f.ring();
    if (static_cast<int>(images.size()) < r->nvars())
        throw std::invalid_argument("substitute: not enough variable images");
    Polynomial out(r);
    for (const auto& t : f.terms()) {
        Polynomial term = Polynomial::constant(r, t.coeff);
        for (int v = 0; v < r->nvars(); ++v)
            for (int e = 0; e < t.monomial.exponent(v); ++e)
                term = term * images[static_cast<size_t>(v)];
        out = out + term;
    }
    return out;
}

}  // namespace pbei
