#ifndef PBEI_IDEALS_HPP
#define PBEI_IDEALS_HPP

#include <string>
#include <utility>
#include <vector>

#include "pbei/graphs.hpp"
#include "pbei/polynomial.hpp"

namespace pbei {

enum class IdealKind { parity, binomial, lss, permanental, custom };
enum class EdgePolyKind { f, g, gbar, perm };

std::string to_string(IdealKind k);
IdealKind ideal_kind_from_string(const std::string& s);

struct GeneratorTag {
    std::pair<int, int> edge{0, 0};  // {0,0} for generators without edge provenance
    EdgePolyKind kind = EdgePolyKind::gbar;
};

/// Ordered generator list with graph-edge provenance.
struct IdealGenerators {
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::vector<GeneratorTag> tags;
    IdealKind kind = IdealKind::custom;
};

/// f_{i,j} = x_i y_j - x_j y_i,  g_{i,j} = x_i x_j + y_i y_j,
/// gbar_{i,j} = x_i x_j - y_i y_j,  perm_{i,j} = x_i y_j + x_j y_i.
/// Arguments are normalized to i < j (f and perm are sign-sensitive).
Polynomial edge_polynomial(EdgePolyKind kind, int i, int j, const RingPtr& ring);

IdealGenerators build_ideal(IdealKind kind, const Graph& g, const RingPtr& ring);

/// Phi: swaps x_i <-> y_i for i in side2, fixes variables of side1.
Polynomial apply_phi(const Polynomial& f, const Bipartition& bp);
IdealGenerators apply_phi(const IdealGenerators& gens, const Bipartition& bp);

/// eta: x_i -> x_i + y_i, y_i -> x_i - y_i. Rejected in characteristic 2,
/// where the map is not invertible (there I_G = L_G and Pi_G = J_G instead).
Polynomial apply_eta(const Polynomial& f);
IdealGenerators apply_eta(const IdealGenerators& gens);

/// Generators of I_{G\e} : gbar_e per the combinatorial description:
/// parity generators of G\e plus f_{i,j} for pairs inside N_{G\e}(u) and
/// inside N_{G\e}(v). Requires: G non-bipartite, e in E(G), G\e bipartite.
IdealGenerators colon_generators_combinatorial(const Graph& g, std::pair<int, int> e,
                                               const RingPtr& ring);

}  // namespace pbei

#endif
