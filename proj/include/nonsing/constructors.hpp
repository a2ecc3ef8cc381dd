#ifndef NONSING_CONSTRUCTORS_HPP
#define NONSING_CONSTRUCTORS_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "nonsing/levels.hpp"
#include "nonsing/sset.hpp"

namespace nonsing {

/// A finite partial order on named elements. `le` must be reflexive,
/// antisymmetric and transitive; validate() checks this.
struct Poset {
    std::vector<std::string> elements;        // sorted, unique
    std::vector<std::vector<bool>> le;        // le[i][j] <=> elements[i] <= elements[j]

    static Poset chain(int n);                          // 0 < 1 < ... < n
    static Poset product(const Poset& a, const Poset& b);  // names "x_y", componentwise order
    void validate() const;
    int index(const std::string& name) const;
};

/// Delta[n]: cells are the injective monotone maps into [n], ids "0-2-3".
SSetPtr standard_simplex(int n);

/// The simplicial subset of Delta[n] of simplices missing at least one vertex.
SSetPtr boundary(int n);

/// The simplex of Delta[n] given by an arbitrary monotone map [e] -> [n].
Simplex simplex_of_monotone(const SSet& delta_n, const Operator& f);
/// The monotone map named by a simplex of Delta[n].
Operator monotone_of_simplex(const SSet& delta_n, const Simplex& x);

/// Nerve of a poset: cells are the strictly increasing chains, ids "a-b-c".
SSetPtr poset_nerve(const Poset& p);

struct Coproduct {
    SSetPtr sset;
    std::vector<SMap> inclusions;
};
/// Disjoint union; cell ids are prefixed "<k>~".
Coproduct coproduct(const std::vector<SSetPtr>& parts);

/// Cartesian product, presented from levelwise pairs.
struct Product {
    SSetPtr sset;
    SSetPtr left, right;
    SMap proj_left, proj_right;

    /// Normal form in the product of a levelwise pair of equal dimension.
    Simplex pair(const Simplex& x, const Simplex& y) const;
    /// The (left, right) components of a product cell.
    const std::pair<Simplex, Simplex>& components(int cell) const;

    std::vector<std::vector<Simplex>> left_levels, right_levels;  // degrees 0..top()
    int top() const { return static_cast<int>(left_levels.size()) - 1; }

private:
    friend Product product(const SSetPtr&, const SSetPtr&);
    std::vector<std::pair<Simplex, Simplex>> cell_components_;
    std::unordered_map<std::string, int> cell_by_pair_;
};
using ProductPtr = std::shared_ptr<const Product>;
Product product(const SSetPtr& X, const SSetPtr& Y);
ProductPtr product_ptr(const SSetPtr& X, const SSetPtr& Y);

/// The map alpha x 1 : Delta[m] x K -> Delta[n] x K for alpha : [m] -> [n].
/// Both products must have Delta factors on the left and the same K.
SMap operator_times_one(const Product& source, const Product& target, const Operator& alpha);

/// SMap determined by images of vertex cells, for targets whose simplices are
/// determined by their vertex tuples. vertex_images maps each vertex cell index
/// of A to a vertex cell index of X. Throws if no simplex matches some cell.
SMap smap_from_vertex_images(const SSetPtr& A, const SSetPtr& X, const std::vector<int>& vertex_images);

/// The generating top cells gamma_j : Delta[n+1] -> Delta[n] x Delta[1],
/// the maximal paths through the grid; checked for the gluing relation
/// gamma_j . delta_{j+1} = gamma_{j+1} . delta_{j+1} on construction.
struct PrismGenerators {
    int n;
    SSetPtr simplex_n1;  // Delta[n+1]
    ProductPtr prism;    // Delta[n] x Delta[1]
    std::vector<SMap> gamma;
};
PrismGenerators prism_generators(int n);

/// Levelwise quotient by the smallest operator-closed equivalence containing
/// the given pairs, with the projection map.
struct Quotient {
    SSetPtr sset;
    SSetPtr source;
    SMap projection;

    /// Image of an arbitrary source simplex in the quotient.
    Simplex image(const Simplex& x) const;
    /// All source simplices of dimension m mapping onto a given class (m <= top).
    std::vector<Simplex> class_members(const Simplex& q, int m) const;
    /// Factors g through the projection; throws unless g identifies each class.
    SMap factor(const SMap& g) const;

    int top() const { return static_cast<int>(class_of_.size()) - 1; }

private:
    friend Quotient quotient(const SSetPtr&, const std::vector<std::pair<Simplex, Simplex>>&);
    std::vector<std::vector<Simplex>> source_levels_;        // sorted levels of the source
    std::vector<std::vector<int>> class_of_;                 // per degree: element -> class
    std::vector<std::vector<Simplex>> class_simplex_;        // per degree: class -> quotient simplex
    int level_index(int m, const Simplex& x) const;
};
Quotient quotient(const SSetPtr& X, const std::vector<std::pair<Simplex, Simplex>>& pairs);

/// Smallest simplicial subset containing the given cells, with its inclusion.
struct Subset {
    SSetPtr sset;
    SMap inclusion;
};
Subset subset_generated(const SSetPtr& X, const std::vector<int>& cells);

/// Pushout of X <- A -> Y, computed as a quotient of the coproduct.
struct Pushout {
    Quotient glued;
    SMap from_left;   // X -> pushout
    SMap from_right;  // Y -> pushout
};
Pushout pushout(const SMap& f, const SMap& g);

}  // namespace nonsing

#endif
