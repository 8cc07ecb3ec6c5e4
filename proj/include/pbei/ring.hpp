#ifndef PBEI_RING_HPP
#define PBEI_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pbei/field.hpp"

namespace pbei {

/// Exponent vector in up to kMaxVars variables with cached total degree.
/// Variable indexing within a RingSpec of n graph vertices:
///   0..n-1    -> x_1..x_n
///   n..2n-1   -> y_1..y_n
///   2n..      -> auxiliary elimination variables t1, t2, ...
class Monomial {
public:
    static constexpr int kMaxVars = 20;

    Monomial() = default;

    int exponent(int v) const { return e_[static_cast<size_t>(v)]; }
    void set_exponent(int v, int value) {
        deg_ += value - e_[static_cast<size_t>(v)];
        e_[static_cast<size_t>(v)] = static_cast<std::uint8_t>(value);
    }
    int degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial quotient_by(const Monomial& o) const;  // this / o, requires o | this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }

    const std::array<std::uint8_t, kMaxVars>& raw() const { return e_; }

private:
    std::array<std::uint8_t, kMaxVars> e_{};
    int deg_ = 0;
};

enum class OrderTag { degrevlex, lex, elim };

/// Monomial order over nvars variables. For elim, variables with
/// elim_block[v] set form a leading degrevlex block (a product order:
/// degrevlex on the block, ties broken by degrevlex on the rest), which
/// is an elimination order for the block.
struct MonomialOrder {
    OrderTag tag = OrderTag::degrevlex;
    int nvars = 0;
    std::vector<std::uint8_t> elim_block;

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const = default;
};

/// S = K[x_1..x_n, y_1..y_n] (plus optional elimination variables),
/// with field and monomial order.
struct RingSpec {
    int n = 0;            // graph vertex count
    int extra_vars = 0;   // auxiliary variables beyond the 2n
    Field field;
    MonomialOrder order;

    int nvars() const { return 2 * n + extra_vars; }
    std::string var_name(int v) const;
    int var_index(const std::string& name) const;  // -1 if unknown

    bool compatible(const RingSpec& o) const {
        return n == o.n && extra_vars == o.extra_vars && field == o.field && order == o.order;
    }
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(int n, std::uint64_t characteristic, OrderTag order = OrderTag::degrevlex);

/// Same ring with an extra elimination variable t (placed in a leading block).
RingPtr extend_ring_with_aux(const RingSpec& base);

/// Same variables, elimination order whose leading block is the x/y pairs of
/// the vertices NOT in `keep`.
RingPtr elimination_ring(const RingSpec& base, const std::vector<int>& keep);

Monomial monomial_x(const RingSpec& r, int i);  // x_i as a monomial
Monomial monomial_y(const RingSpec& r, int i);

}  // namespace pbei

#endif
