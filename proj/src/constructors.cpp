#include "nonsing/constructors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace nonsing {

namespace {

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

int level_index_of(const std::vector<Simplex>& sorted_level, const Simplex& x) {
    auto it = std::lower_bound(sorted_level.begin(), sorted_level.end(), x);
    if (it == sorted_level.end() || !(*it == x))
        throw std::logic_error("level_index_of: simplex not found");
    return static_cast<int>(it - sorted_level.begin());
}

}  // namespace

Poset Poset::chain(int n) {
    Poset p;
    for (int i = 0; i <= n; ++i) p.elements.push_back(std::to_string(i));
    std::sort(p.elements.begin(), p.elements.end());
    p.le.assign(p.elements.size(), std::vector<bool>(p.elements.size(), false));
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        for (std::size_t j = 0; j < p.elements.size(); ++j)
            p.le[i][j] = std::stoi(p.elements[i]) <= std::stoi(p.elements[j]);
    return p;
}

Poset Poset::product(const Poset& a, const Poset& b) {
    Poset p;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < a.elements.size(); ++i)
        for (std::size_t j = 0; j < b.elements.size(); ++j) {
            p.elements.push_back(a.elements[i] + "_" + b.elements[j]);
            pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    std::vector<int> order(p.elements.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return p.elements[static_cast<std::size_t>(x)] < p.elements[static_cast<std::size_t>(y)]; });
    std::vector<std::string> els;
    std::vector<std::pair<int, int>> prs;
    for (int i : order) {
        els.push_back(p.elements[static_cast<std::size_t>(i)]);
        prs.push_back(pairs[static_cast<std::size_t>(i)]);
    }
    p.elements = std::move(els);
    p.le.assign(p.elements.size(), std::vector<bool>(p.elements.size(), false));
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        for (std::size_t j = 0; j < p.elements.size(); ++j)
            p.le[i][j] = a.le[static_cast<std::size_t>(prs[i].first)][static_cast<std::size_t>(prs[j].first)] &&
                         b.le[static_cast<std::size_t>(prs[i].second)][static_cast<std::size_t>(prs[j].second)];
    return p;
}

void Poset::validate() const {
    std::size_t n = elements.size();
    if (le.size() != n) throw std::invalid_argument("poset: relation size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (le[i].size() != n) throw std::invalid_argument("poset: relation size mismatch");
        if (!le[i][i]) throw std::invalid_argument("poset: relation not reflexive at " + elements[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && le[i][j] && le[j][i])
                throw std::invalid_argument("poset: relation not antisymmetric at " + elements[i] + "," + elements[j]);
            if (le[i][j])
                for (std::size_t k = 0; k < n; ++k)
                    if (le[j][k] && !le[i][k])
                        throw std::invalid_argument("poset: relation not transitive at " + elements[i] + "," +
                                                    elements[j] + "," + elements[k]);
        }
}

int Poset::index(const std::string& name) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), name);
    if (it == elements.end() || *it != name) return -1;
    return static_cast<int>(it - elements.begin());
}

SSetPtr standard_simplex(int n) {
    if (n < 0) throw std::invalid_argument("standard_simplex: negative dimension");
    std::vector<Operator> monos;
    for (int e = 0; e <= n; ++e)
        for (const Operator& m : all_injections(e, n)) monos.push_back(m);
    auto id_of = [&](const Operator& m) { return join_ints(m.images(), '-'); };
    std::map<std::string, int> final_index;
    std::vector<std::pair<int, std::string>> keys;
    for (const Operator& m : monos) keys.emplace_back(m.from(), id_of(m));
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size(); ++i) final_index[keys[i].second] = static_cast<int>(i);
    std::vector<Cell> cells(monos.size());
    for (const Operator& m : monos) {
        Cell c;
        c.id = id_of(m);
        c.dim = m.from();
        for (int i = 0; i <= c.dim && c.dim > 0; ++i) {
            Operator sub = compose(Operator::face(c.dim, i), m);
            c.faces.push_back(Simplex{final_index.at(id_of(sub)), Operator::identity(c.dim - 1)});
        }
        cells[static_cast<std::size_t>(final_index.at(c.id))] = std::move(c);
    }
    return SSet::make(std::move(cells));
}

SSetPtr boundary(int n) {
    if (n < 1) throw std::invalid_argument("boundary: need n >= 1");
    SSetPtr dn = standard_simplex(n);
    std::vector<int> facets;
    for (int ci = 0; ci < dn->cell_count(); ++ci)
        if (dn->cell(ci).dim == n - 1) facets.push_back(ci);
    return subset_generated(dn, facets).sset;
}

Simplex simplex_of_monotone(const SSet& delta_n, const Operator& f) {
    EpiMonoParts parts = epi_mono_factor(f);
    int ci = delta_n.cell_index(join_ints(parts.mono.images(), '-'));
    if (ci < 0) throw std::invalid_argument("simplex_of_monotone: not a standard simplex");
    return Simplex{ci, parts.epi};
}

Operator monotone_of_simplex(const SSet& delta_n, const Simplex& x) {
    const std::string& id = delta_n.cell(x.cell).id;
    std::vector<int> imgs;
    std::size_t pos = 0;
    while (pos < id.size()) {
        std::size_t next = id.find('-', pos);
        if (next == std::string::npos) next = id.size();
        imgs.push_back(std::stoi(id.substr(pos, next - pos)));
        pos = next + 1;
    }
    Operator mono(std::move(imgs), delta_n.dim());
    return compose(x.deg, mono);
}

SSetPtr poset_nerve(const Poset& p) {
    p.validate();
    int n = static_cast<int>(p.elements.size());
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int low) -> void {
        if (!cur.empty()) chains.push_back(cur);
        for (int v = low; v < n; ++v) {
            if (!cur.empty()) {
                int last = cur.back();
                if (v == last || !p.le[static_cast<std::size_t>(last)][static_cast<std::size_t>(v)]) continue;
            }
            cur.push_back(v);
            self(self, 0);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    auto id_of = [&](const std::vector<int>& ch) {
        std::string s;
        for (std::size_t i = 0; i < ch.size(); ++i) {
            if (i) s += '-';
            s += p.elements[static_cast<std::size_t>(ch[i])];
        }
        return s;
    };
    std::map<std::string, int> final_index;
    std::vector<std::pair<int, std::string>> keys;
    for (const auto& ch : chains) keys.emplace_back(static_cast<int>(ch.size()) - 1, id_of(ch));
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size(); ++i) final_index[keys[i].second] = static_cast<int>(i);
    std::vector<Cell> cells(chains.size());
    for (const auto& ch : chains) {
        Cell c;
        c.id = id_of(ch);
        c.dim = static_cast<int>(ch.size()) - 1;
        for (int i = 0; i <= c.dim && c.dim > 0; ++i) {
            std::vector<int> sub = ch;
            sub.erase(sub.begin() + i);
            c.faces.push_back(Simplex{final_index.at(id_of(sub)), Operator::identity(c.dim - 1)});
        }
        cells[static_cast<std::size_t>(final_index.at(c.id))] = std::move(c);
    }
    return SSet::make(std::move(cells));
}

Coproduct coproduct(const std::vector<SSetPtr>& parts) {
    std::vector<std::tuple<int, std::string, int, int>> keys;  // (dim, newid, part, orig)
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (int ci = 0; ci < parts[k]->cell_count(); ++ci) {
            const Cell& c = parts[k]->cell(ci);
            keys.emplace_back(c.dim, std::to_string(k) + "~" + c.id, static_cast<int>(k), ci);
        }
    std::sort(keys.begin(), keys.end());
    std::vector<std::vector<int>> final_of(parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k)
        final_of[k].assign(static_cast<std::size_t>(parts[k]->cell_count()), -1);
    for (std::size_t pos = 0; pos < keys.size(); ++pos)
        final_of[static_cast<std::size_t>(std::get<2>(keys[pos]))][static_cast<std::size_t>(std::get<3>(keys[pos]))] =
            static_cast<int>(pos);
    std::vector<Cell> cells;
    cells.reserve(keys.size());
    for (const auto& [dim, newid, k, ci] : keys) {
        const Cell& orig = parts[static_cast<std::size_t>(k)]->cell(ci);
        Cell c;
        c.id = newid;
        c.dim = dim;
        for (const Simplex& f : orig.faces)
            c.faces.push_back(Simplex{final_of[static_cast<std::size_t>(k)][static_cast<std::size_t>(f.cell)], f.deg});
        cells.push_back(std::move(c));
    }
    Coproduct out;
    out.sset = SSet::make(std::move(cells));
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::vector<Simplex> assign;
        for (int ci = 0; ci < parts[k]->cell_count(); ++ci)
            assign.push_back(cell_simplex(*out.sset, final_of[k][static_cast<std::size_t>(ci)]));
        out.inclusions.push_back(SMap::make(parts[k], out.sset, std::move(assign)));
    }
    return out;
}

Product product(const SSetPtr& X, const SSetPtr& Y) {
    Product out;
    out.left = X;
    out.right = Y;
    if (X->dim() < 0 || Y->dim() < 0) {
        out.sset = SSet::empty();
        out.proj_left = SMap::make_unchecked(out.sset, X, {});
        out.proj_right = SMap::make_unchecked(out.sset, Y, {});
        return out;
    }
    int top = X->dim() + Y->dim();
    std::vector<std::vector<Simplex>> xl(static_cast<std::size_t>(top) + 1), yl(static_cast<std::size_t>(top) + 1);
    for (int m = 0; m <= top; ++m) {
        xl[static_cast<std::size_t>(m)] = level(*X, m);
        yl[static_cast<std::size_t>(m)] = level(*Y, m);
    }
    LevelData data;
    data.top = top;
    for (int m = 0; m <= top; ++m)
        data.sizes.push_back(static_cast<long long>(xl[static_cast<std::size_t>(m)].size()) *
                             static_cast<long long>(yl[static_cast<std::size_t>(m)].size()));
    auto decode = [&](int m, long long e) {
        long long ny = static_cast<long long>(yl[static_cast<std::size_t>(m)].size());
        return std::pair<const Simplex&, const Simplex&>(xl[static_cast<std::size_t>(m)][static_cast<std::size_t>(e / ny)],
                                                         yl[static_cast<std::size_t>(m)][static_cast<std::size_t>(e % ny)]);
    };
    auto encode = [&](int m, const Simplex& x, const Simplex& y) -> long long {
        long long ny = static_cast<long long>(yl[static_cast<std::size_t>(m)].size());
        return static_cast<long long>(level_index_of(xl[static_cast<std::size_t>(m)], x)) * ny +
               level_index_of(yl[static_cast<std::size_t>(m)], y);
    };
    data.face = [&, X, Y](int m, long long e, int i) {
        auto [x, y] = decode(m, e);
        Operator d = Operator::face(m, i);
        return encode(m - 1, act(*X, x, d), act(*Y, y, d));
    };
    data.degen = [&, X, Y](int m, long long e, int i) {
        auto [x, y] = decode(m, e);
        Operator s = Operator::degeneracy(m, i);
        return encode(m + 1, act(*X, x, s), act(*Y, y, s));
    };
    data.name = [&, X, Y](int m, long long e) {
        auto [x, y] = decode(m, e);
        return "{" + simplex_key(*X, x) + "*" + simplex_key(*Y, y) + "}";
    };
    LevelsResult lr = presentation_from_levels(data);
    out.sset = lr.sset;
    out.left_levels = xl;
    out.right_levels = yl;
    out.cell_components_.assign(static_cast<std::size_t>(out.sset->cell_count()),
                                {Simplex{}, Simplex{}});
    for (int m = 0; m <= top; ++m)
        for (long long e = 0; e < data.sizes[static_cast<std::size_t>(m)]; ++e) {
            const Simplex& s = lr.elem_simplex[static_cast<std::size_t>(m)][static_cast<std::size_t>(e)];
            if (s.deg.is_identity()) {
                auto [x, y] = decode(m, e);
                out.cell_components_[static_cast<std::size_t>(s.cell)] = {x, y};
                out.cell_by_pair_[simplex_key(*X, x) + "*" + simplex_key(*Y, y)] = s.cell;
            }
        }
    std::vector<Simplex> ax, ay;
    for (int ci = 0; ci < out.sset->cell_count(); ++ci) {
        ax.push_back(out.cell_components_[static_cast<std::size_t>(ci)].first);
        ay.push_back(out.cell_components_[static_cast<std::size_t>(ci)].second);
    }
    out.proj_left = SMap::make(out.sset, X, std::move(ax));
    out.proj_right = SMap::make(out.sset, Y, std::move(ay));
    return out;
}

ProductPtr product_ptr(const SSetPtr& X, const SSetPtr& Y) {
    return std::make_shared<const Product>(product(X, Y));
}

Simplex Product::pair(const Simplex& x, const Simplex& y) const {
    if (x.dim() != y.dim()) throw std::invalid_argument("product pair: dimension mismatch");
    JointSplit js = joint_degeneracy_split(x.deg, y.deg);
    std::string key = simplex_key(*left, Simplex{x.cell, js.left}) + "*" + simplex_key(*right, Simplex{y.cell, js.right});
    auto it = cell_by_pair_.find(key);
    if (it == cell_by_pair_.end()) throw std::logic_error("product pair: missing cell for " + key);
    return Simplex{it->second, js.common};
}

const std::pair<Simplex, Simplex>& Product::components(int cell) const {
    return cell_components_[static_cast<std::size_t>(cell)];
}

SMap operator_times_one(const Product& source, const Product& target, const Operator& alpha) {
    if (alpha.from() != source.left->dim() || alpha.to() != target.left->dim())
        throw std::invalid_argument("operator_times_one: operator shape mismatch");
    std::vector<Simplex> assign;
    for (int ci = 0; ci < source.sset->cell_count(); ++ci) {
        const auto& [a, b] = source.components(ci);
        Operator ma = compose(monotone_of_simplex(*source.left, a), alpha);
        assign.push_back(target.pair(simplex_of_monotone(*target.left, ma), b));
    }
    return SMap::make(source.sset, target.sset, std::move(assign));
}

SMap smap_from_vertex_images(const SSetPtr& A, const SSetPtr& X, const std::vector<int>& vertex_images) {
    VertexTupleIndex idx(X);
    std::vector<Simplex> assign;
    for (int ci = 0; ci < A->cell_count(); ++ci) {
        const Cell& c = A->cell(ci);
        std::vector<int> t;
        t.reserve(c.vertex_cells.size());
        for (int vc : c.vertex_cells) t.push_back(vertex_images[static_cast<std::size_t>(vc)]);
        idx.ensure(c.dim);
        if (!idx.determined(c.dim))
            throw std::invalid_argument("smap_from_vertex_images: target not vertex-determined at dim " +
                                        std::to_string(c.dim));
        const Simplex* s = idx.lookup(c.dim, t);
        if (!s)
            throw std::invalid_argument("smap_from_vertex_images: no simplex with matching vertices for cell '" +
                                        c.id + "'");
        assign.push_back(*s);
    }
    return SMap::make(A, X, std::move(assign));
}

PrismGenerators prism_generators(int n) {
    PrismGenerators out;
    out.n = n;
    out.simplex_n1 = standard_simplex(n + 1);
    out.prism = product_ptr(standard_simplex(n), standard_simplex(1));
    for (int j = 0; j <= n; ++j) {
        Operator sigma_j = Operator::degeneracy(n, j);
        std::vector<int> step;
        for (int i = 0; i <= n + 1; ++i) step.push_back(i <= j ? 0 : 1);
        Operator step_j(std::move(step), 1);
        std::vector<Simplex> assign;
        for (int ci = 0; ci < out.simplex_n1->cell_count(); ++ci) {
            Operator mu = monotone_of_simplex(*out.simplex_n1, cell_simplex(*out.simplex_n1, ci));
            assign.push_back(out.prism->pair(simplex_of_monotone(*out.prism->left, compose(mu, sigma_j)),
                                             simplex_of_monotone(*out.prism->right, compose(mu, step_j))));
        }
        out.gamma.push_back(SMap::make(out.simplex_n1, out.prism->sset, std::move(assign)));
    }
    for (int j = 0; j < n; ++j) {
        Simplex face = simplex_of_monotone(*out.simplex_n1, Operator::face(n + 1, j + 1));
        if (!(out.gamma[static_cast<std::size_t>(j)].push(face) ==
              out.gamma[static_cast<std::size_t>(j + 1)].push(face)))
            throw std::logic_error("prism_generators: gluing relation fails at j=" + std::to_string(j));
    }
    return out;
}

Quotient quotient(const SSetPtr& X, const std::vector<std::pair<Simplex, Simplex>>& pairs) {
    int top = X->dim();
    for (const auto& [a, b] : pairs) {
        if (a.dim() != b.dim()) throw std::invalid_argument("quotient: pair dimensions differ");
        top = std::max(top, a.dim());
    }
    Quotient out;
    out.source = X;
    if (X->dim() < 0) {
        out.sset = SSet::empty();
        out.projection = SMap::make_unchecked(X, out.sset, {});
        return out;
    }
    std::vector<std::vector<Simplex>> lv(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<int>> parent(static_cast<std::size_t>(top) + 1);
    for (int m = 0; m <= top; ++m) {
        lv[static_cast<std::size_t>(m)] = level(*X, m);
        parent[static_cast<std::size_t>(m)].resize(lv[static_cast<std::size_t>(m)].size());
        for (std::size_t i = 0; i < parent[static_cast<std::size_t>(m)].size(); ++i)
            parent[static_cast<std::size_t>(m)][i] = static_cast<int>(i);
    }
    auto find = [&](int m, int i) {
        auto& p = parent[static_cast<std::size_t>(m)];
        while (p[static_cast<std::size_t>(i)] != i) {
            p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
            i = p[static_cast<std::size_t>(i)];
        }
        return i;
    };
    std::deque<std::tuple<int, int, int>> work;  // (degree, elem, elem)
    auto unite = [&](int m, int i, int j) {
        int ri = find(m, i), rj = find(m, j);
        if (ri == rj) return;
        // keep the smaller index as root: roots are then canonical representatives
        parent[static_cast<std::size_t>(m)][static_cast<std::size_t>(std::max(ri, rj))] = std::min(ri, rj);
        work.emplace_back(m, i, j);
    };
    for (const auto& [a, b] : pairs)
        unite(a.dim(), level_index_of(lv[static_cast<std::size_t>(a.dim())], a),
              level_index_of(lv[static_cast<std::size_t>(b.dim())], b));
    while (!work.empty()) {
        auto [m, i, j] = work.front();
        work.pop_front();
        const Simplex& x = lv[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)];
        const Simplex& y = lv[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
        for (int t = 0; t <= m && m > 0; ++t) {
            Operator d = Operator::face(m, t);
            unite(m - 1, level_index_of(lv[static_cast<std::size_t>(m - 1)], act(*X, x, d)),
                  level_index_of(lv[static_cast<std::size_t>(m - 1)], act(*X, y, d)));
        }
        if (m < top)
            for (int t = 0; t <= m; ++t) {
                Operator s = Operator::degeneracy(m, t);
                unite(m + 1, level_index_of(lv[static_cast<std::size_t>(m + 1)], act(*X, x, s)),
                      level_index_of(lv[static_cast<std::size_t>(m + 1)], act(*X, y, s)));
            }
    }
    // classes per degree, canonically ordered by their minimal member
    std::vector<std::vector<int>> class_of(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<int>> class_rep(static_cast<std::size_t>(top) + 1);  // class -> elem index
    for (int m = 0; m <= top; ++m) {
        auto& cls = class_of[static_cast<std::size_t>(m)];
        cls.assign(lv[static_cast<std::size_t>(m)].size(), -1);
        for (std::size_t i = 0; i < cls.size(); ++i) {
            int r = find(m, static_cast<int>(i));
            if (cls[static_cast<std::size_t>(r)] == -1) {
                cls[static_cast<std::size_t>(r)] = static_cast<int>(class_rep[static_cast<std::size_t>(m)].size());
                class_rep[static_cast<std::size_t>(m)].push_back(r);
            }
            cls[i] = cls[static_cast<std::size_t>(r)];
        }
    }
    LevelData data;
    data.top = top;
    for (int m = 0; m <= top; ++m)
        data.sizes.push_back(static_cast<long long>(class_rep[static_cast<std::size_t>(m)].size()));
    auto rep_simplex = [&](int m, long long e) -> const Simplex& {
        return lv[static_cast<std::size_t>(m)]
                 [static_cast<std::size_t>(class_rep[static_cast<std::size_t>(m)][static_cast<std::size_t>(e)])];
    };
    data.face = [&, X](int m, long long e, int i) -> long long {
        Simplex f = act(*X, rep_simplex(m, e), Operator::face(m, i));
        return class_of[static_cast<std::size_t>(m - 1)]
                       [static_cast<std::size_t>(level_index_of(lv[static_cast<std::size_t>(m - 1)], f))];
    };
    data.degen = [&, X](int m, long long e, int i) -> long long {
        Simplex s = act(*X, rep_simplex(m, e), Operator::degeneracy(m, i));
        return class_of[static_cast<std::size_t>(m + 1)]
                       [static_cast<std::size_t>(level_index_of(lv[static_cast<std::size_t>(m + 1)], s))];
    };
    data.name = [&, X](int m, long long e) { return "{" + simplex_key(*X, rep_simplex(m, e)) + "}"; };
    LevelsResult lr = presentation_from_levels(data);
    out.sset = lr.sset;
    out.source_levels_ = std::move(lv);
    out.class_of_ = std::move(class_of);
    out.class_simplex_.resize(static_cast<std::size_t>(top) + 1);
    for (int m = 0; m <= top; ++m)
        out.class_simplex_[static_cast<std::size_t>(m)] = lr.elem_simplex[static_cast<std::size_t>(m)];
    std::vector<Simplex> proj;
    for (int ci = 0; ci < X->cell_count(); ++ci) proj.push_back(out.image(cell_simplex(*X, ci)));
    out.projection = SMap::make(X, out.sset, std::move(proj));
    return out;
}

int Quotient::level_index(int m, const Simplex& x) const {
    return level_index_of(source_levels_[static_cast<std::size_t>(m)], x);
}

Simplex Quotient::image(const Simplex& x) const {
    if (x.dim() <= top()) {
        int cls = class_of_[static_cast<std::size_t>(x.dim())][static_cast<std::size_t>(level_index(x.dim(), x))];
        return class_simplex_[static_cast<std::size_t>(x.dim())][static_cast<std::size_t>(cls)];
    }
    int d = source->cell(x.cell).dim;
    int cls = class_of_[static_cast<std::size_t>(d)][static_cast<std::size_t>(level_index(d, Simplex{x.cell, Operator::identity(d)}))];
    const Simplex& base = class_simplex_[static_cast<std::size_t>(d)][static_cast<std::size_t>(cls)];
    return Simplex{base.cell, compose(x.deg, base.deg)};
}

std::vector<Simplex> Quotient::class_members(const Simplex& q, int m) const {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < source_levels_[static_cast<std::size_t>(m)].size(); ++i) {
        int cls = class_of_[static_cast<std::size_t>(m)][i];
        if (class_simplex_[static_cast<std::size_t>(m)][static_cast<std::size_t>(cls)] == q)
            out.push_back(source_levels_[static_cast<std::size_t>(m)][i]);
    }
    return out;
}

SMap Quotient::factor(const SMap& g) const {
    if (g.src().get() != source.get()) throw std::invalid_argument("quotient factor: source mismatch");
    std::vector<Simplex> assign;
    for (int ci = 0; ci < sset->cell_count(); ++ci) {
        int d = sset->cell(ci).dim;
        std::vector<Simplex> members = class_members(cell_simplex(*sset, ci), d);
        if (members.empty()) throw std::logic_error("quotient factor: empty class");
        Simplex value = g.push(members.front());
        for (const Simplex& m : members)
            if (!(g.push(m) == value))
                throw std::invalid_argument("quotient factor: map does not respect the identification at cell '" +
                                            sset->cell(ci).id + "'");
        assign.push_back(value);
    }
    return SMap::make(sset, g.dst(), std::move(assign));
}

Subset subset_generated(const SSetPtr& X, const std::vector<int>& cells) {
    std::set<int> keep(cells.begin(), cells.end());
    std::deque<int> work(cells.begin(), cells.end());
    while (!work.empty()) {
        int ci = work.front();
        work.pop_front();
        for (const Simplex& f : X->cell(ci).faces)
            if (keep.insert(f.cell).second) work.push_back(f.cell);
    }
    std::vector<int> ordered(keep.begin(), keep.end());  // ascending = (dim, id) order of X
    std::vector<int> final_of(static_cast<std::size_t>(X->cell_count()), -1);
    for (std::size_t pos = 0; pos < ordered.size(); ++pos)
        final_of[static_cast<std::size_t>(ordered[pos])] = static_cast<int>(pos);
    std::vector<Cell> sub;
    for (int ci : ordered) {
        const Cell& orig = X->cell(ci);
        Cell c;
        c.id = orig.id;
        c.dim = orig.dim;
        for (const Simplex& f : orig.faces)
            c.faces.push_back(Simplex{final_of[static_cast<std::size_t>(f.cell)], f.deg});
        sub.push_back(std::move(c));
    }
    Subset out;
    out.sset = SSet::make(std::move(sub));
    std::vector<Simplex> assign;
    for (int ci : ordered) assign.push_back(cell_simplex(*X, ci));
    out.inclusion = SMap::make(out.sset, X, std::move(assign));
    return out;
}

Pushout pushout(const SMap& f, const SMap& g) {
    if (f.src().get() != g.src().get()) throw std::invalid_argument("pushout: sources differ");
    Coproduct cp = coproduct({f.dst(), g.dst()});
    std::vector<std::pair<Simplex, Simplex>> pairs;
    for (int ai = 0; ai < f.src()->cell_count(); ++ai)
        pairs.emplace_back(cp.inclusions[0].push(f.assignment()[static_cast<std::size_t>(ai)]),
                           cp.inclusions[1].push(g.assignment()[static_cast<std::size_t>(ai)]));
    Pushout out{quotient(cp.sset, pairs), SMap::identity(cp.sset), SMap::identity(cp.sset)};
    out.from_left = compose(cp.inclusions[0], out.glued.projection);
    out.from_right = compose(cp.inclusions[1], out.glued.projection);
    return out;
}

}  // namespace nonsing
