#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "nonsing/constructors.hpp"

using namespace nonsing;

namespace {

// Independent oracle: count monotone maps [m] -> [n] by direct enumeration.
long long count_monotone(int m, int n) {
    return static_cast<long long>(all_operators(m, n).size());
}

// Independent oracle: EZ-decompose all levelwise pairs of two sets by brute
// force over (cell, surjection) pairs and count the jointly non-degenerate ones.
std::vector<long long> brute_product_cells(const SSet& X, const SSet& Y) {
    int top = X.dim() + Y.dim();
    std::vector<long long> dist(static_cast<std::size_t>(top) + 1, 0);
    for (int m = 0; m <= top; ++m)
        for (const Simplex& x : level(X, m))
            for (const Simplex& y : level(Y, m)) {
                bool joint = false;
                for (int j = 0; j < m && !joint; ++j)
                    joint = x.deg(j) == x.deg(j + 1) && y.deg(j) == y.deg(j + 1);
                if (!joint) ++dist[static_cast<std::size_t>(m)];
            }
    return dist;
}

std::string top_id(int n) {
    std::string s = "0";
    for (int t = 1; t <= n; ++t) s += "-" + std::to_string(t);
    return s;
}

}  // namespace

TEST_CASE("standard simplex cell and level counts") {
    for (int n = 0; n <= 4; ++n) {
        SSetPtr dn = standard_simplex(n);
        std::vector<int> dist = dn->cell_dist();
        for (int k = 0; k <= n; ++k) {
            // C(n+1, k+1) injections [k] -> [n]
            long long c = 1;
            for (int i = 1; i <= k + 1; ++i) c = c * (n + 1 - (k + 1) + i) / i;
            CHECK(dist[static_cast<std::size_t>(k)] == c);
        }
        for (int m = 0; m <= 4; ++m) CHECK(level_count(*dn, m) == count_monotone(m, n));
    }
}

TEST_CASE("poset nerve") {
    Poset single;
    single.elements = {"a"};
    single.le = {{true}};
    CHECK(poset_nerve(single)->cell_count() == 1);

    // nerve of the chain [n] is Delta[n]
    for (int n = 1; n <= 3; ++n) {
        SSetPtr nv = poset_nerve(Poset::chain(n));
        CHECK(nv->cell_dist() == standard_simplex(n)->cell_dist());
    }

    SSetPtr sq = poset_nerve(Poset::product(Poset::chain(1), Poset::chain(1)));
    CHECK(sq->cell_dist() == std::vector<int>{4, 5, 2});

    // rejects a non-transitive relation
    Poset bad;
    bad.elements = {"a", "b", "c"};
    bad.le = {{true, true, false}, {false, true, true}, {false, false, true}};
    CHECK_THROWS_AS(poset_nerve(bad), std::invalid_argument);
}

TEST_CASE("coproduct") {
    Coproduct none = coproduct({});
    CHECK(none.sset->dim() == -1);
    CHECK(none.sset->cell_count() == 0);

    SSetPtr d1 = standard_simplex(1);
    Coproduct one = coproduct({d1});
    CHECK(one.sset->cell_dist() == d1->cell_dist());
    CHECK(is_iso(one.inclusions[0]));

    SSetPtr d0 = standard_simplex(0);
    Coproduct two = coproduct({d0, d0});
    CHECK(two.sset->cell_dist() == std::vector<int>{2});
}

TEST_CASE("product cell counts match the levelwise oracle") {
    SSetPtr d1 = standard_simplex(1);
    SSetPtr d2 = standard_simplex(2);
    SSetPtr sq = poset_nerve(Poset::product(Poset::chain(1), Poset::chain(1)));

    Product p11 = product(d1, d1);
    CHECK(p11.sset->cell_dist() == std::vector<int>{4, 5, 2});
    {
        std::vector<long long> oracle = brute_product_cells(*d1, *d1);
        std::vector<int> got = p11.sset->cell_dist();
        REQUIRE(got.size() == oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(got[i] == oracle[i]);
    }
    {
        Product p = product(d2, d1);
        std::vector<long long> oracle = brute_product_cells(*d2, *d1);
        std::vector<int> got = p.sset->cell_dist();
        REQUIRE(got.size() == oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(got[i] == oracle[i]);
        // n+1 top cells in dimension n+1
        CHECK(got.back() == 3);
    }
    {
        Product p = product(sq, d1);
        std::vector<long long> oracle = brute_product_cells(*sq, *d1);
        std::vector<int> got = p.sset->cell_dist();
        for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(got[i] == oracle[i]);
    }

    // unit law: X x Delta[0] is isomorphic to X via the projection
    SSetPtr d0 = standard_simplex(0);
    Product unit = product(d2, d0);
    CHECK(is_iso(unit.proj_left));
}

TEST_CASE("product pair lookup and projections") {
    SSetPtr d1 = standard_simplex(1);
    Product p = product(d1, d1);
    for (int m = 0; m <= 3; ++m)
        for (const Simplex& x : level(*d1, m))
            for (const Simplex& y : level(*d1, m)) {
                Simplex s = p.pair(x, y);
                CHECK(p.proj_left.push(s) == x);
                CHECK(p.proj_right.push(s) == y);
            }
}

TEST_CASE("nerve of the grid poset agrees with the product") {
    for (int n = 1; n <= 3; ++n) {
        SSetPtr nerve = poset_nerve(Poset::product(Poset::chain(n), Poset::chain(1)));
        Product prism = product(standard_simplex(n), standard_simplex(1));
        CHECK(nerve->cell_dist() == prism.sset->cell_dist());
        // canonical comparison: grid vertex "i_j" -> pair (vertex i, vertex j)
        std::vector<int> vimg(static_cast<std::size_t>(nerve->cell_count()), -1);
        for (int ci = 0; ci < nerve->cell_count(); ++ci) {
            const Cell& c = nerve->cell(ci);
            if (c.dim != 0) continue;
            auto us = c.id.find('_');
            Simplex vx = simplex_of_monotone(*prism.left, Operator::vertex(n, std::stoi(c.id.substr(0, us))));
            Simplex vy = simplex_of_monotone(*prism.right, Operator::vertex(1, std::stoi(c.id.substr(us + 1))));
            vimg[static_cast<std::size_t>(ci)] = prism.pair(vx, vy).cell;
        }
        SMap cmp = smap_from_vertex_images(nerve, prism.sset, vimg);
        CHECK(is_iso(cmp));
    }
}

TEST_CASE("prism generators and their relations") {
    // n = 0: a single generator, the identity path of Delta[0] x Delta[1]
    PrismGenerators g0 = prism_generators(0);
    CHECK(g0.gamma.size() == 1);
    CHECK(g0.prism->sset->cell_dist() == std::vector<int>{2, 1});

    // n = 1: vertex paths (0,0),(0,1),(1,1) and (0,0),(1,0),(1,1)
    PrismGenerators g1 = prism_generators(1);
    REQUIRE(g1.gamma.size() == 2);
    auto path = [&](const SMap& g) {
        std::vector<std::string> names;
        Simplex top = cell_simplex(*g1.simplex_n1, g1.simplex_n1->cell_index("0-1-2"));
        for (const Simplex& v : vertices(*g1.prism->sset, g.push(top)))
            names.push_back(g1.prism->sset->cell(v.cell).id);
        return names;
    };
    auto vname = [&](int i, int j) {
        Simplex vx = simplex_of_monotone(*g1.prism->left, Operator::vertex(1, i));
        Simplex vy = simplex_of_monotone(*g1.prism->right, Operator::vertex(1, j));
        return g1.prism->sset->cell(g1.prism->pair(vx, vy).cell).id;
    };
    CHECK(path(g1.gamma[0]) == std::vector<std::string>{vname(0, 0), vname(0, 1), vname(1, 1)});
    CHECK(path(g1.gamma[1]) == std::vector<std::string>{vname(0, 0), vname(1, 0), vname(1, 1)});

    // generators are degreewise injective and glue along delta_{j+1}, n <= 5
    for (int n = 0; n <= 5; ++n) {
        PrismGenerators g = prism_generators(n);
        for (int j = 0; j < n; ++j) {
            Simplex face = simplex_of_monotone(*g.simplex_n1, Operator::face(n + 1, j + 1));
            CHECK(g.gamma[static_cast<std::size_t>(j)].push(face) ==
                  g.gamma[static_cast<std::size_t>(j + 1)].push(face));
        }
        for (const SMap& gm : g.gamma) CHECK(is_degreewise_injective(gm, n + 1));
    }
}

TEST_CASE("degeneracy exchange on prism generators") {
    // (sigma_k x 1) gamma^{n+1}_j = gamma^n_j sigma_{k+1} for j <= k,
    //                               gamma^n_{j-1} sigma_k  for j > k
    for (int n = 1; n <= 4; ++n) {
        PrismGenerators big = prism_generators(n);
        PrismGenerators small = prism_generators(n - 1);
        for (int k = 0; k < n; ++k) {
            SMap collapse = operator_times_one(*big.prism, *small.prism, Operator::degeneracy(n - 1, k));
            for (int j = 0; j <= n; ++j) {
                Simplex top = cell_simplex(*big.simplex_n1, big.simplex_n1->cell_index(top_id(n + 1)));
                Simplex lhs = collapse.push(big.gamma[static_cast<std::size_t>(j)].push(top));
                Operator sig = j <= k ? Operator::degeneracy(n, k + 1) : Operator::degeneracy(n, k);
                int jj = j <= k ? j : j - 1;
                Simplex gen = small.gamma[static_cast<std::size_t>(jj)].push(
                    cell_simplex(*small.simplex_n1, small.simplex_n1->cell_index(top_id(n))));
                Simplex rhs = act(*small.prism->sset, gen, sig);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("quotient: collapsing an edge of the triangle") {
    SSetPtr d2 = standard_simplex(2);
    // identify the 0-2 edge with the degenerate edge at vertex 0
    Simplex edge02{d2->cell_index("0-2"), Operator::identity(1)};
    Simplex degen0{d2->cell_index("0"), Operator::degeneracy(0, 0)};
    Quotient q = quotient(d2, {{edge02, degen0}});
    CHECK(q.sset->cell_dist() == std::vector<int>{2, 2, 1});
    CHECK(is_degreewise_surjective(q.projection, 3));

    // the image of the top cell has a degenerate delta_1 face
    Simplex top_img = q.projection.push(cell_simplex(*d2, d2->cell_index("0-1-2")));
    Simplex f1 = act(*q.sset, top_img, Operator::face(2, 1));
    CHECK(!f1.deg.is_identity());
    // and equal first and last vertices
    std::vector<Simplex> vs = vertices(*q.sset, top_img);
    CHECK(vs[0] == vs[2]);
    CHECK(!(vs[0] == vs[1]));
}

TEST_CASE("quotient against a hand-rolled union-find oracle") {
    // same construction, tracked independently: collapse the 0-2 edge of
    // Delta[2]; levelwise classes counted by a direct fixpoint on keys
    SSetPtr d2 = standard_simplex(2);
    std::vector<std::vector<Simplex>> lv;
    for (int m = 0; m <= 2; ++m) lv.push_back(level(*d2, m));
    std::vector<std::map<Simplex, Simplex>> parent(3);
    for (int m = 0; m <= 2; ++m)
        for (const Simplex& s : lv[static_cast<std::size_t>(m)]) parent[static_cast<std::size_t>(m)].insert({s, s});
    auto find = [&](int m, Simplex s) {
        while (!(parent[static_cast<std::size_t>(m)].at(s) == s)) s = parent[static_cast<std::size_t>(m)].at(s);
        return s;
    };
    std::vector<std::tuple<int, Simplex, Simplex>> work;
    auto unite = [&](int m, const Simplex& a, const Simplex& b) {
        Simplex ra = find(m, a), rb = find(m, b);
        if (ra == rb) return;
        parent[static_cast<std::size_t>(m)].at(std::max(ra, rb)) = std::min(ra, rb);
        work.emplace_back(m, a, b);
    };
    unite(1, Simplex{d2->cell_index("0-2"), Operator::identity(1)},
          Simplex{d2->cell_index("0"), Operator::degeneracy(0, 0)});
    while (!work.empty()) {
        auto [m, a, b] = work.back();
        work.pop_back();
        for (int i = 0; i <= m && m > 0; ++i)
            unite(m - 1, act(*d2, a, Operator::face(m, i)), act(*d2, b, Operator::face(m, i)));
        if (m < 2)
            for (int i = 0; i <= m; ++i)
                unite(m + 1, act(*d2, a, Operator::degeneracy(m, i)), act(*d2, b, Operator::degeneracy(m, i)));
    }
    std::vector<int> class_counts;
    for (int m = 0; m <= 2; ++m) {
        std::set<Simplex> roots;
        for (const Simplex& s : lv[static_cast<std::size_t>(m)]) roots.insert(find(m, s));
        class_counts.push_back(static_cast<int>(roots.size()));
    }
    // the construction must produce exactly one level element per oracle class
    Simplex edge02{d2->cell_index("0-2"), Operator::identity(1)};
    Simplex degen0{d2->cell_index("0"), Operator::degeneracy(0, 0)};
    Quotient q = quotient(d2, {{edge02, degen0}});
    for (int m = 0; m <= 2; ++m)
        CHECK(level_count(*q.sset, m) == class_counts[static_cast<std::size_t>(m)]);
}

TEST_CASE("quotient with no pairs is the identity") {
    SSetPtr d2 = standard_simplex(2);
    Quotient q = quotient(d2, {});
    CHECK(is_iso(q.projection));
}

TEST_CASE("circle: edge with both endpoints identified") {
    SSetPtr d1 = standard_simplex(1);
    Simplex v0{d1->cell_index("0"), Operator::identity(0)};
    Simplex v1{d1->cell_index("1"), Operator::identity(0)};
    Quotient q = quotient(d1, {{v0, v1}});
    CHECK(q.sset->cell_dist() == std::vector<int>{1, 1});
    Simplex edge = q.projection.push(cell_simplex(*d1, d1->cell_index("0-1")));
    std::vector<Simplex> vs = vertices(*q.sset, edge);
    CHECK(vs[0] == vs[1]);
}

TEST_CASE("quotient factor") {
    SSetPtr d2 = standard_simplex(2);
    SSetPtr d1 = standard_simplex(1);
    // collapse the 0-1 edge; the map 0,1 -> 0, 2 -> 1 factors through it
    Simplex edge01{d2->cell_index("0-1"), Operator::identity(1)};
    Simplex degen0{d2->cell_index("0"), Operator::degeneracy(0, 0)};
    Quotient q = quotient(d2, {{edge01, degen0}});
    std::vector<int> vimg(static_cast<std::size_t>(d2->cell_count()), -1);
    vimg[static_cast<std::size_t>(d2->cell_index("0"))] = d1->cell_index("0");
    vimg[static_cast<std::size_t>(d2->cell_index("1"))] = d1->cell_index("0");
    vimg[static_cast<std::size_t>(d2->cell_index("2"))] = d1->cell_index("1");
    SMap g = smap_from_vertex_images(d2, d1, vimg);
    SMap bar = q.factor(g);
    CHECK(compose(q.projection, bar) == g);

    // a map separating 0 and 1 does not factor
    vimg[static_cast<std::size_t>(d2->cell_index("1"))] = d1->cell_index("1");
    vimg[static_cast<std::size_t>(d2->cell_index("2"))] = d1->cell_index("1");
    SMap h = smap_from_vertex_images(d2, d1, vimg);
    CHECK_THROWS_AS(q.factor(h), std::invalid_argument);
}

TEST_CASE("subset generated") {
    SSetPtr d2 = standard_simplex(2);
    std::vector<int> all;
    for (int ci = 0; ci < d2->cell_count(); ++ci) all.push_back(ci);
    CHECK(*subset_generated(d2, all).sset == *d2);

    // the three edges generate the boundary
    std::vector<int> edges;
    for (int ci = 0; ci < d2->cell_count(); ++ci)
        if (d2->cell(ci).dim == 1) edges.push_back(ci);
    Subset b = subset_generated(d2, edges);
    CHECK(b.sset->cell_dist() == std::vector<int>{3, 3});
    CHECK(is_degreewise_injective(b.inclusion, 3));

    // the 0-2 edge generates itself plus endpoints
    Subset e = subset_generated(d2, {d2->cell_index("0-2")});
    CHECK(e.sset->cell_dist() == std::vector<int>{2, 1});
}

TEST_CASE("boundary constructor") {
    CHECK(boundary(2)->cell_dist() == std::vector<int>{3, 3});
    CHECK(boundary(3)->cell_dist() == std::vector<int>{4, 6, 4});
}

TEST_CASE("pushout of two intervals along a point is a wedge") {
    SSetPtr d0 = standard_simplex(0);
    SSetPtr d1 = standard_simplex(1);
    SMap f = smap_from_vertex_images(d0, d1, {d1->cell_index("1")});
    SMap g = smap_from_vertex_images(d0, d1, {d1->cell_index("0")});
    Pushout p = pushout(f, g);
    CHECK(p.glued.sset->cell_dist() == std::vector<int>{3, 2});
    CHECK(compose(f, p.from_left) == compose(g, p.from_right));
}
