#ifndef PBEI_RESOLUTION_HPP
#define PBEI_RESOLUTION_HPP

#include <map>
#include <string>
#include <vector>

#include "pbei/groebner.hpp"

namespace pbei {

/// Graded Betti numbers of a cyclic module S/I, entries (i,j) -> beta_{i,j}.
struct BettiTable {
    std::map<std::pair<int, int>, long> entries;
    int ring_vars = 0;
    bool complete = true;  // false for a degree-truncated Koszul table
    int j_max = -1;        // truncation bound when !complete

    long get(int i, int j) const;
    void set(int i, int j, long beta);

    std::string diagram() const;  // Macaulay-style text diagram
    std::string to_json() const;
    static BettiTable from_json(const std::string& text);

    bool operator==(const BettiTable& o) const {
        return entries == o.entries && ring_vars == o.ring_vars;
    }
};

/// reg = max(j - i) over nonzero entries; requires a complete table.
int regularity(const BettiTable& t);
/// pd = max i over nonzero entries; requires a complete table.
int projective_dimension(const BettiTable& t);
/// Pure: for each 1 <= i <= pd exactly one j with beta_{i,j} != 0.
bool is_pure(const BettiTable& t);

/// One map F_k -> F_{k-1} of a graded free resolution, sparse columns.
struct FreeResolutionStep {
    std::vector<int> row_degrees;
    std::vector<int> col_degrees;
    /// columns[c] = sorted (row, entry) pairs, entry a homogeneous polynomial
    /// of degree col_degrees[c] - row_degrees[row].
    std::vector<std::vector<std::pair<int, Polynomial>>> columns;
};

struct FreeResolution {
    RingPtr ring;
    /// steps[k] is phi_{k+1}: F_{k+1} -> F_k; F_0 degrees are
    /// steps[0].row_degrees (rank 1, degree 0, for cyclic S/I).
    std::vector<FreeResolutionStep> steps;
};

/// Generating set of the syzygy module of the given columns (a module
/// presentation), via a module Groebner basis with position-over-term order.
FreeResolutionStep syzygies(const RingPtr& ring, const FreeResolutionStep& presentation);

/// Iterated Schreyer resolution of S/I built on the reduced GB of I.
/// Generally non-minimal.
FreeResolution schreyer_resolution(const IdealGenerators& gens);

/// Cancel unit entries in place until no constant entries remain.
void minimalize(FreeResolution& res);

/// Betti table read off the minimalized Schreyer resolution. When
/// `minimal_out` is given it receives the minimalized resolution.
BettiTable betti_table_schreyer(const IdealGenerators& gens,
                                FreeResolution* minimal_out = nullptr);

/// Independent oracle: Tor via the Koszul complex on the 2n variables,
/// strand by strand, decomposed by Z^n-multidegree. Partial: degrees <= j_max.
/// When `multigraded_out` is given it receives the Z^n-refined Betti numbers
/// (homological degree, multidegree) -> beta.
BettiTable betti_table_koszul(const IdealGenerators& gens, int j_max,
                              std::map<std::pair<int, std::vector<int>>, long>*
                                  multigraded_out = nullptr);

/// Hilbert function of S/I in degrees 0..dmax (normal-monomial counts).
std::vector<long> hilbert_function(const GroebnerBasis& gb, int dmax);

/// Composition check phi_k . phi_{k+1} = 0 for every consecutive pair.
bool composes_to_zero(const FreeResolution& res);
/// No nonzero constant entry in any step.
bool is_minimal(const FreeResolution& res);

}  // namespace pbei

#endif
