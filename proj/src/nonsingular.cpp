#include "nonsing/nonsingular.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace nonsing {

NonsingularReport is_nonsingular(const SSetPtr& X) {
    NonsingularReport r;
    for (int ci = 0; ci < X->cell_count(); ++ci) {
        const Cell& c = X->cell(ci);
        for (int k = 0; k <= c.dim; ++k)
            for (int l = k + 1; l <= c.dim; ++l)
                if (c.vertex_cells[static_cast<std::size_t>(k)] == c.vertex_cells[static_cast<std::size_t>(l)]) {
                    r.nonsingular = false;
                    r.witness_cell = ci;
                    r.witness_k = k;
                    r.witness_l = l;
                    return r;
                }
    }
    return r;
}

Simplex factor_through_degeneracy(const SSetPtr& X, const Simplex& x, int k, int l) {
    int n = x.dim();
    if (!(0 <= k && k < l && l <= n))
        throw std::invalid_argument("factor_through_degeneracy: need 0 <= k < l <= n");
    if (!(act(*X, x, Operator::vertex(n, k)) == act(*X, x, Operator::vertex(n, l))))
        throw std::invalid_argument("factor_through_degeneracy: the named vertices differ");
    if (!is_nonsingular(X).nonsingular)
        throw std::invalid_argument("factor_through_degeneracy: ambient set is singular");
    Operator rho = Operator::collapse_interval(n, k, l);
    Simplex y = act(*X, x, minimal_section(rho));
    Simplex back{y.cell, compose(rho, y.deg)};
    if (!(back == x)) throw std::logic_error("factor_through_degeneracy: recomposition fails");
    return y;
}

namespace {

struct Witness {
    int cell;
    int k;
    int l;
};

std::optional<Witness> pick_witness(const SSet& X, WitnessOrder order) {
    std::vector<Witness> found;
    for (int ci = 0; ci < X.cell_count(); ++ci) {
        const Cell& c = X.cell(ci);
        for (int k = 0; k <= c.dim; ++k) {
            for (int l = k + 1; l <= c.dim; ++l)
                if (c.vertex_cells[static_cast<std::size_t>(k)] == c.vertex_cells[static_cast<std::size_t>(l)]) {
                    found.push_back({ci, k, l});
                    k = c.dim + 1;
                    break;
                }
            if (!found.empty() && found.back().cell == ci) break;
        }
    }
    if (found.empty()) return std::nullopt;
    switch (order) {
        case WitnessOrder::Default:
            return found.front();
        case WitnessOrder::HighestDimensionFirst:
            return *std::max_element(found.begin(), found.end(), [&](const Witness& a, const Witness& b) {
                if (X.cell(a.cell).dim != X.cell(b.cell).dim) return X.cell(a.cell).dim < X.cell(b.cell).dim;
                return X.cell(a.cell).id < X.cell(b.cell).id;
            });
        case WitnessOrder::ReverseId: {
            Witness best = found.front();
            for (const Witness& w : found) {
                if (X.cell(w.cell).dim < X.cell(best.cell).dim ||
                    (X.cell(w.cell).dim == X.cell(best.cell).dim && X.cell(w.cell).id > X.cell(best.cell).id))
                    best = w;
            }
            return best;
        }
    }
    return found.front();
}

}  // namespace

DesingResult desingularize(const SSetPtr& X, WitnessOrder order) {
    DesingResult out;
    out.reflection = X;
    out.unit = SMap::identity(X);
    while (true) {
        std::optional<Witness> w = pick_witness(*out.reflection, order);
        if (!w) break;
        const SSetPtr& cur = out.reflection;
        const Cell& c = cur->cell(w->cell);
        int n = c.dim;
        Operator rho = Operator::collapse_interval(n, w->k, w->l);
        Simplex x = cell_simplex(*cur, w->cell);
        Simplex y = act(*cur, x, minimal_section(rho));
        Simplex collapsed{y.cell, compose(rho, y.deg)};
        Quotient q = quotient(cur, {{x, collapsed}});
        if (q.sset->cell_count() >= cur->cell_count())
            throw std::logic_error("desingularize: collapse did not reduce the cell count");
        out.steps.push_back({c.id, w->k, w->l});
        out.unit = compose(out.unit, q.projection);
        out.reflection = q.sset;
    }
    return out;
}

SMap factor_through_unit(const DesingResult& d, const SMap& g) {
    if (g.src().get() != d.unit.src().get())
        throw std::invalid_argument("factor_through_unit: source mismatch");
    const SSetPtr& refl = d.reflection;
    std::vector<Simplex> assign(static_cast<std::size_t>(refl->cell_count()),
                                Simplex{-1, Operator::identity(0)});
    std::vector<char> done(static_cast<std::size_t>(refl->cell_count()), 0);
    const SSetPtr& X = d.unit.src();
    for (int m = 0; m <= X->dim(); ++m) {
        for (const Simplex& p : level(*X, m)) {
            Simplex q = d.unit.push(p);
            Simplex gp = g.push(p);
            if (q.deg.is_identity() && q.dim() == m) {
                int ci = q.cell;
                if (!done[static_cast<std::size_t>(ci)]) {
                    assign[static_cast<std::size_t>(ci)] = gp;
                    done[static_cast<std::size_t>(ci)] = 1;
                } else if (!(assign[static_cast<std::size_t>(ci)] == gp)) {
                    throw std::invalid_argument("factor_through_unit: map does not respect the unit at cell '" +
                                                refl->cell(ci).id + "'");
                }
            }
        }
    }
    for (char c : done)
        if (!c) throw std::logic_error("factor_through_unit: unit is not degreewise surjective");
    return SMap::make(refl, g.dst(), std::move(assign));
}

ProductComparison product_comparison(const SSetPtr& X, const SSetPtr& Y) {
    ProductComparison out;
    DesingResult dx = desingularize(X);
    DesingResult dy = desingularize(Y);
    Product pxy = product(X, Y);
    DesingResult dpxy = desingularize(pxy.sset);
    Product target = product(dx.reflection, dy.reflection);

    SMap to_dx = compose(pxy.proj_left, dx.unit);
    SMap to_dy = compose(pxy.proj_right, dy.unit);
    SMap gx = factor_through_unit(dpxy, to_dx);
    SMap gy = factor_through_unit(dpxy, to_dy);
    std::vector<Simplex> assign;
    for (int ci = 0; ci < dpxy.reflection->cell_count(); ++ci)
        assign.push_back(target.pair(gx.assignment()[static_cast<std::size_t>(ci)],
                                     gy.assignment()[static_cast<std::size_t>(ci)]));
    out.a = SMap::make(dpxy.reflection, target.sset, std::move(assign));

    // a . unit equals the product of the units
    std::vector<Simplex> unit_pair;
    for (int ci = 0; ci < pxy.sset->cell_count(); ++ci)
        unit_pair.push_back(target.pair(to_dx.assignment()[static_cast<std::size_t>(ci)],
                                        to_dy.assignment()[static_cast<std::size_t>(ci)]));
    SMap eta_times = SMap::make(pxy.sset, target.sset, std::move(unit_pair));
    out.unit_square_commutes = compose(dpxy.unit, out.a) == eta_times;
    out.a_surjective = is_degreewise_surjective(out.a, std::max(target.sset->dim(), 0));
    out.iso = is_iso(out.a);
    return out;
}

EqualizerReport equalizer_counterexample() {
    EqualizerReport rep;
    SSetPtr d2 = standard_simplex(2);
    SSetPtr d0 = standard_simplex(0);
    // the triangle with its 0-2 edge collapsed to a vertex
    Simplex edge02{d2->cell_index("0-2"), Operator::identity(1)};
    Simplex degen0{d2->cell_index("0"), Operator::degeneracy(0, 0)};
    Quotient q = quotient(d2, {{edge02, degen0}});
    SSetPtr Q = q.sset;

    // its two vertices give the only pair of distinct maps from the point
    std::vector<int> verts = Q->cells_of_dim(0);
    if (verts.size() != 2) throw std::logic_error("equalizer_counterexample: expected two vertices");
    SMap f = SMap::make(d0, Q, {cell_simplex(*Q, verts[0])});
    SMap g = SMap::make(d0, Q, {cell_simplex(*Q, verts[1])});

    // equalizer of two maps out of the point: the point if they agree, else empty
    auto equalizer_of = [&](const SMap& u, const SMap& v) -> SSetPtr {
        return u == v ? d0 : SSet::empty();
    };
    rep.sanity_equal_maps_have_point_equalizer = equalizer_of(f, f)->cell_count() == 1;
    SSetPtr eq = equalizer_of(f, g);
    rep.equalizer_of_distinct_maps_empty = eq->dim() == -1;

    DesingResult dq = desingularize(Q);
    rep.reflected_target_is_point =
        dq.reflection->cell_count() == 1 && dq.reflection->dim() == 0;
    SMap df = compose(f, dq.unit);
    SMap dg = compose(g, dq.unit);
    rep.reflected_maps_equal = df == dg;

    // the reflector sends the empty equalizer to the empty set, while the
    // equalizer of the reflected maps is the whole point
    SSetPtr d_eq = desingularize(eq).reflection;
    SSetPtr eq_reflected = rep.reflected_maps_equal ? d0 : SSet::empty();
    rep.passed = rep.sanity_equal_maps_have_point_equalizer && rep.equalizer_of_distinct_maps_empty &&
                 rep.reflected_target_is_point && rep.reflected_maps_equal && d_eq->dim() == -1 &&
                 eq_reflected->cell_count() == 1;
    return rep;
}

}  // namespace nonsing
