#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nonsing/constructors.hpp"
#include "nonsing/sset.hpp"

using namespace nonsing;

TEST_CASE("standard simplex structure") {
    SSetPtr d2 = standard_simplex(2);
    CHECK(d2->dim() == 2);
    CHECK(d2->cell_dist() == std::vector<int>{3, 3, 1});
    CHECK(d2->cell_count() == 7);
    SSetPtr d0 = standard_simplex(0);
    CHECK(d0->cell_count() == 1);
}

TEST_CASE("validation rejects bad presentations") {
    // two cells with the same id
    std::vector<Cell> dup(2);
    dup[0].id = "v";
    dup[1].id = "v";
    CHECK_THROWS_AS(SSet::make(std::move(dup)), std::invalid_argument);

    // edge with a dangling face
    std::vector<Cell> dangling(2);
    dangling[0].id = "v";
    dangling[1].id = "e";
    dangling[1].dim = 1;
    dangling[1].faces = {Simplex{0, Operator::identity(0)}, Simplex{5, Operator::identity(0)}};
    CHECK_THROWS_AS(SSet::make(std::move(dangling)), std::invalid_argument);

    // 2-cell whose faces break the simplicial identity: build a triangle whose
    // edges do not close up (edge 02 replaced by a disjoint edge)
    SSetPtr d2 = standard_simplex(2);
    std::vector<Cell> cells;
    for (int ci = 0; ci < d2->cell_count(); ++ci) cells.push_back(d2->cell(ci));
    // swap the endpoints of the delta_1 face of the top cell
    Cell& top = cells.back();
    std::swap(top.faces[0], top.faces[1]);
    bool threw = false;
    try {
        SSet::make(std::move(cells));
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    CHECK(threw);
}

TEST_CASE("act on representables is composition") {
    SSetPtr d2 = standard_simplex(2);
    int top = d2->cell_index("0-1-2");
    Simplex t = cell_simplex(*d2, top);
    CHECK(act(*d2, t, Operator::identity(2)) == t);
    Simplex v1 = act(*d2, t, Operator::vertex(2, 1));
    CHECK(d2->cell(v1.cell).id == "1");
    // act agrees with composing monotone maps
    for (const Operator& a : all_operators(2, 2)) {
        Simplex s = act(*d2, t, a);
        CHECK(monotone_of_simplex(*d2, s) == a);
        for (const Operator& b : all_operators(1, 2)) {
            CHECK(act(*d2, act(*d2, s, b), Operator::face(1, 0)) ==
                  act(*d2, s, compose(Operator::face(1, 0), b)));
        }
    }
}

TEST_CASE("functoriality over a non-representable set") {
    SSetPtr b3 = boundary(3);
    for (int m = 0; m <= 3; ++m)
        for (const Simplex& x : level(*b3, m))
            for (int k = 0; k <= 3; ++k)
                for (const Operator& a : all_operators(k, m))
                    for (const Operator& b : all_operators(std::max(0, k - 1), k))
                        CHECK(act(*b3, act(*b3, x, a), b) == act(*b3, x, compose(b, a)));
}

TEST_CASE("vertices and injectivity") {
    SSetPtr d3 = standard_simplex(3);
    Simplex t = cell_simplex(*d3, d3->cell_index("0-1-2-3"));
    std::vector<Simplex> vs = vertices(*d3, t);
    CHECK(vs.size() == 4);
    CHECK(is_injective_representing_map(*d3, t));
    // any properly degenerate simplex has a repeated vertex
    Simplex degen = act(*d3, t, Operator::degeneracy(3, 1));
    CHECK(!is_injective_representing_map(*d3, degen));
    std::vector<Simplex> dv = vertices(*d3, degen);
    CHECK(dv[1] == dv[2]);
}

TEST_CASE("levels and counts") {
    SSetPtr d1 = standard_simplex(1);
    // level m of Delta[1] has one entry per monotone [m] -> [1]
    for (int m = 0; m <= 5; ++m) {
        CHECK(static_cast<long long>(level(*d1, m).size()) == level_count(*d1, m));
        CHECK(level_count(*d1, m) == static_cast<long long>(all_operators(m, 1).size()));
    }
    // EZ normal form is unique: distinct (cell, surjection) pairs stay distinct
    SSetPtr b2 = boundary(2);
    for (int m = 0; m <= 4; ++m) {
        std::vector<Simplex> lv = level(*b2, m);
        CHECK(std::adjacent_find(lv.begin(), lv.end()) == lv.end());
    }
}

TEST_CASE("smap validation and push") {
    SSetPtr d1 = standard_simplex(1);
    SSetPtr d2 = standard_simplex(2);
    // the face delta_1 : Delta[1] -> Delta[2]
    std::vector<Simplex> assign(static_cast<std::size_t>(d1->cell_count()), Simplex{});
    assign[static_cast<std::size_t>(d1->cell_index("0"))] = simplex_of_monotone(*d2, Operator::vertex(2, 0));
    assign[static_cast<std::size_t>(d1->cell_index("1"))] = simplex_of_monotone(*d2, Operator::vertex(2, 2));
    assign[static_cast<std::size_t>(d1->cell_index("0-1"))] = simplex_of_monotone(*d2, Operator({0, 2}, 2));
    SMap f = SMap::make(d1, d2, assign);
    CHECK(f.push(Simplex{d1->cell_index("0-1"), Operator::degeneracy(1, 0)}).deg ==
          Operator::degeneracy(1, 0));

    // naturality violation: edge sent to 0-2 but endpoints sent to 0 and 1
    assign[static_cast<std::size_t>(d1->cell_index("1"))] = simplex_of_monotone(*d2, Operator::vertex(2, 1));
    CHECK_THROWS_AS(SMap::make(d1, d2, assign), std::invalid_argument);
}

TEST_CASE("smap naturality extends to all operators") {
    SSetPtr sq = poset_nerve(Poset::product(Poset::chain(1), Poset::chain(1)));
    SSetPtr d1 = standard_simplex(1);
    // project the square onto its first coordinate via vertex images
    std::vector<int> vimg(static_cast<std::size_t>(sq->cell_count()), -1);
    for (int ci = 0; ci < sq->cell_count(); ++ci)
        if (sq->cell(ci).dim == 0)
            vimg[static_cast<std::size_t>(ci)] = d1->cell_index(sq->cell(ci).id.substr(0, 1));
    SMap f = smap_from_vertex_images(sq, d1, vimg);
    for (int m = 0; m <= 4; ++m)
        for (const Simplex& x : level(*sq, m))
            for (const Operator& a : all_operators(2, m))
                CHECK(f.push(act(*sq, x, a)) == act(*d1, f.push(x), a));
}

TEST_CASE("composition of smaps is associative") {
    SSetPtr d1 = standard_simplex(1);
    SSetPtr d2 = standard_simplex(2);
    SMap f = smap_from_vertex_images(d1, d2, {d2->cell_index("0"), d2->cell_index("1")});
    SMap g = SMap::identity(d2);
    CHECK(compose(compose(f, g), g) == compose(f, compose(g, g)));
}

TEST_CASE("is_iso") {
    SSetPtr d2 = standard_simplex(2);
    CHECK(is_iso(SMap::identity(d2)));
    SSetPtr d1 = standard_simplex(1);
    SMap incl = smap_from_vertex_images(d1, d2, {d2->cell_index("0"), d2->cell_index("1")});
    CHECK(!is_iso(incl));
}

TEST_CASE("vertex tuple index") {
    SSetPtr d2 = standard_simplex(2);
    VertexTupleIndex idx(d2);
    CHECK(idx.determined(2));
    std::vector<int> t{d2->cell_index("0"), d2->cell_index("1"), d2->cell_index("2")};
    const Simplex* s = idx.lookup(2, t);
    REQUIRE(s != nullptr);
    CHECK(s->cell == d2->cell_index("0-1-2"));
    CHECK(!idx.contains(2, {t[0], t[2], t[1]}));
}
