#ifndef NONSING_MAPPING_SPACE_HPP
#define NONSING_MAPPING_SPACE_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "nonsing/constructors.hpp"
#include "nonsing/sset.hpp"

namespace nonsing {

/// All simplicial maps A -> X, by backtracking over A's cells in increasing
/// dimension; output canonically sorted, complete and duplicate-free.
std::vector<SMap> enumerate_maps(const SSetPtr& A, const SSetPtr& X);
long long count_maps(const SSetPtr& A, const SSetPtr& X);

using PrismGeneratorsPtr = std::shared_ptr<const PrismGenerators>;
PrismGeneratorsPtr prism_generators_ptr(int n);

enum class ExpRoute { Auto, SliceSequences, Levelwise };

/// The mapping set X^K: level n is the set of maps Delta[n] x K -> X.
/// Levels are materialized up to `cap`; `complete` is false when a
/// non-degenerate simplex was found one degree past the cap (a cap-overflow
/// diagnostic: the construction is then a truncation).
class Exponential {
public:
    SSetPtr sset;
    SSetPtr base;      // X
    SSetPtr exponent;  // K
    int cap = 0;
    bool complete = true;
    ExpRoute route = ExpRoute::Auto;

    long long vertex_count() const;
    /// Cached Delta[n] x K.
    ProductPtr level_product(int n) const;
    /// The underlying map Delta[d] x K -> X of a cell.
    SMap map_of_cell(int ci) const;
    /// Normal form in X^K of a map Delta[n] x K -> X (n <= cap).
    Simplex simplex_of_map(const SMap& f) const;

private:
    friend std::shared_ptr<Exponential> exponential(const SSetPtr&, const SSetPtr&, int, ExpRoute);
    // slice-sequence route
    std::vector<SMap> slices_;
    std::vector<std::vector<int>> cell_seq_;
    std::map<std::vector<Simplex>, int> slice_by_assignment_;
    std::unordered_map<std::vector<int>, int, IntVecHash> cell_by_seq_;
    mutable std::shared_ptr<VertexTupleIndex> xtuples_;
    // levelwise route
    std::vector<std::vector<SMap>> level_maps_;
    std::vector<std::vector<Simplex>> elem_simplex_;
    mutable std::vector<ProductPtr> products_;
};
using ExponentialPtr = std::shared_ptr<Exponential>;

/// cap < 0 selects the default cap |maps(K, X)|, the vertex count of X^K.
/// Throws when the result would exceed the materialization limit; the
/// streaming check below still covers such sizes.
ExponentialPtr exponential(const SSetPtr& X, const SSetPtr& K, int cap = -1,
                           ExpRoute route = ExpRoute::Auto);

/// Streaming scan of the non-degenerate simplices of X^K that never stores
/// the simplicial set: reports whether every one has pairwise distinct
/// vertices, with a witness and the cell census.
struct ExpScanReport {
    bool nonsingular = true;
    std::vector<long long> cell_dist;
    long long cells = 0;
    int witness_dim = -1;
    int witness_k = -1;
    int witness_l = -1;
};
ExpScanReport exponential_nonsingular_scan(const SSetPtr& X, const SSetPtr& K);

/// curry, for f : X x K -> Y given as a map out of the product XK:
/// the adjoint X -> Y^K. YK must be complete for dim X (cap >= dim X).
SMap curry(const SMap& f, const Product& XK, const Exponential& YK);
/// uncurry, for g : X -> Y^K: the adjoint X x K -> Y out of XK.
SMap uncurry(const SMap& g, const Product& XK, const Exponential& YK);

/// An n-simplex of X^{Delta[1]} presented by its values on the n+1
/// generating (n+1)-simplices of the prism, glued along the prism relations.
class PrismSimplex {
public:
    static PrismSimplex make(PrismGeneratorsPtr gens, SSetPtr X, std::vector<Simplex> values);
    /// From a full map Delta[n] x Delta[1] -> X.
    static PrismSimplex from_map(PrismGeneratorsPtr gens, const SMap& phi);

    int n() const { return static_cast<int>(values_.size()) - 1; }
    const SSetPtr& target() const { return X_; }
    const std::vector<Simplex>& values() const { return values_; }
    const PrismGeneratorsPtr& gens() const { return gens_; }

    /// Reconstructs the full map; exact round trip with from_map.
    SMap to_map() const;
    /// Value on an arbitrary simplex of the prism.
    Simplex eval(const Simplex& s) const;
    /// Precomposition with alpha x 1, alpha : [m] -> [n].
    PrismSimplex acted(const Operator& alpha, const PrismGeneratorsPtr& source_gens) const;
    /// The vertex at position j of X^{Delta[1]}, i.e. a 1-simplex of X.
    Simplex edge_at(int j) const;
    /// Restriction to the bottom (i = 0) or top (i = 1) of the prism.
    Simplex vertex_restriction(int i) const;

    bool operator==(const PrismSimplex& other) const { return values_ == other.values_; }

private:
    PrismGeneratorsPtr gens_;
    SSetPtr X_;
    std::vector<Simplex> values_;
};

/// All n-simplices of X^{Delta[1]}, as prism simplices.
std::vector<PrismSimplex> prism_simplices(const SSetPtr& X, int n);

/// Given equal adjacent vertices edge_at(k) == edge_at(k+1) over a
/// non-singular target, produces the (n-1)-simplex whose k-th degeneracy is
/// phi, verifying the gluing relations and the recomposition at runtime.
PrismSimplex collapse_prism_simplex(const PrismSimplex& phi, int k);

/// The square argument propagating vertex equality: given
/// edge_at(k) == edge_at(l) over a non-singular target, verifies
/// edge_at(j) == edge_at(j+1) for all k <= j < l. A false return would be a
/// counterexample and is reported by callers.
bool check_vertex_propagation(const PrismSimplex& phi, int k, int l);

}  // namespace nonsing

#endif
