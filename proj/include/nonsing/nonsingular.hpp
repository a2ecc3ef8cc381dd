#ifndef NONSING_NONSINGULAR_HPP
#define NONSING_NONSINGULAR_HPP

#include <string>
#include <vector>

#include "nonsing/constructors.hpp"
#include "nonsing/sset.hpp"

namespace nonsing {

/// Result of the singularity scan: when a cell has a repeated vertex, the
/// witness names the first offender (lowest dimension, then id) with the
/// smallest colliding index pair.
struct NonsingularReport {
    bool nonsingular = true;
    int witness_cell = -1;
    int witness_k = -1;
    int witness_l = -1;
};
NonsingularReport is_nonsingular(const SSetPtr& X);

/// Given x.eps_k == x.eps_l over a non-singular ambient set, the unique y
/// with x = y . (sigma_k ... sigma_{l-1}); computed through the minimal
/// section and verified by recomposition.
Simplex factor_through_degeneracy(const SSetPtr& X, const Simplex& x, int k, int l);

/// Collapse discipline for the reflector loop (the default picks the lowest
/// dimension, then cell id, then the smallest colliding pair; the
/// alternatives exist to test order independence).
enum class WitnessOrder { Default, HighestDimensionFirst, ReverseId };

struct DesingStep {
    std::string cell_id;
    int k = -1;
    int l = -1;
};

/// The universal non-singular quotient with its unit, computed by repeatedly
/// identifying a witness cell with the degeneracy of its section face.
struct DesingResult {
    SSetPtr reflection;
    SMap unit;  // X -> reflection, degreewise surjective
    std::vector<DesingStep> steps;
};
DesingResult desingularize(const SSetPtr& X, WitnessOrder order = WitnessOrder::Default);

/// Factors g : X -> Z through the unit of a desingularization of X.
/// Requires g to identify everything the unit identifies (true whenever Z is
/// non-singular); checked exhaustively on the levels.
SMap factor_through_unit(const DesingResult& d, const SMap& g);

/// The canonical comparison a : D(X x Y) -> DX x DY induced by the two
/// projections, with the intermediate surjectivity check, and whether it is
/// an isomorphism.
struct ProductComparison {
    SMap a;
    bool unit_square_commutes = false;
    bool a_surjective = false;
    bool iso = false;
};
ProductComparison product_comparison(const SSetPtr& X, const SSetPtr& Y);

/// The two distinct vertex maps into the collapsed triangle have empty
/// equalizer, while their images under the reflector have equalizer a point;
/// the report records both legs and passes iff they disagree.
struct EqualizerReport {
    bool sanity_equal_maps_have_point_equalizer = false;
    bool equalizer_of_distinct_maps_empty = false;
    bool reflected_target_is_point = false;
    bool reflected_maps_equal = false;
    bool passed = false;
};
EqualizerReport equalizer_counterexample();

}  // namespace nonsing

#endif
