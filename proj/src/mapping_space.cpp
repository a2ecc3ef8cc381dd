#include "nonsing/mapping_space.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "nonsing/nonsingular.hpp"

namespace nonsing {

namespace {

constexpr long long kMaterializeLimit = 500000;

// Raised when the slice-sequence route cannot run because two simplices of
// the base share a vertex tuple; the levelwise route handles such bases.
struct NotVertexDetermined : std::runtime_error {
    explicit NotVertexDetermined(int d)
        : std::runtime_error("exponential: base is not vertex-determined at level " + std::to_string(d)) {}
};

int find_level_index(const std::vector<Simplex>& lv, const Simplex& x) {
    auto it = std::lower_bound(lv.begin(), lv.end(), x);
    if (it == lv.end() || !(*it == x)) throw std::logic_error("level index: simplex not found");
    return static_cast<int>(it - lv.begin());
}

// Backtracking search over the cells of A in increasing dimension. Candidate
// images for a d-cell are read off a boundary-tuple index of X's level sets;
// vertex choices are pruned as soon as a higher cell's boundary completes.
class MapSearch {
public:
    MapSearch(const SSetPtr& A, const SSetPtr& X) : A_(A), X_(X) {
        dimA_ = A->dim();
        if (dimA_ < 0 || X->dim() < 0) return;
        levels_.resize(static_cast<std::size_t>(dimA_) + 1);
        for (int d = 0; d <= dimA_; ++d) levels_[static_cast<std::size_t>(d)] = level(*X, d);
        bnd_.resize(static_cast<std::size_t>(dimA_) + 1);
        for (int d = 1; d <= dimA_; ++d) {
            auto& lv = levels_[static_cast<std::size_t>(d)];
            for (std::size_t xi = 0; xi < lv.size(); ++xi) {
                std::vector<int> key;
                key.reserve(static_cast<std::size_t>(d) + 1);
                for (int i = 0; i <= d; ++i)
                    key.push_back(find_level_index(levels_[static_cast<std::size_t>(d - 1)],
                                                   act(*X, lv[xi], Operator::face(d, i))));
                bnd_[static_cast<std::size_t>(d)][key].push_back(static_cast<int>(xi));
            }
        }
        int nc = A->cell_count();
        superfaces_.resize(static_cast<std::size_t>(nc));
        boundary_cells_.resize(static_cast<std::size_t>(nc));
        for (int ci = 0; ci < nc; ++ci) {
            std::vector<int> bc;
            for (const Simplex& f : A->cell(ci).faces) bc.push_back(f.cell);
            std::sort(bc.begin(), bc.end());
            bc.erase(std::unique(bc.begin(), bc.end()), bc.end());
            for (int b : bc) superfaces_[static_cast<std::size_t>(b)].push_back(ci);
            boundary_cells_[static_cast<std::size_t>(ci)] = std::move(bc);
        }
    }

    void run(const std::function<void(const std::vector<int>&)>& emit) {
        if (A_->cell_count() == 0) {
            std::vector<int> none;
            emit(none);
            return;
        }
        if (X_->dim() < 0) return;
        assign_.assign(static_cast<std::size_t>(A_->cell_count()), -1);
        pending_.resize(static_cast<std::size_t>(A_->cell_count()));
        for (int ci = 0; ci < A_->cell_count(); ++ci)
            pending_[static_cast<std::size_t>(ci)] =
                static_cast<int>(boundary_cells_[static_cast<std::size_t>(ci)].size());
        emit_ = &emit;
        descend(0);
    }

    const std::vector<std::vector<Simplex>>& levels() const { return levels_; }

private:
    std::vector<int> pushed_tuple(int ci) const {
        const Cell& c = A_->cell(ci);
        std::vector<int> key;
        key.reserve(c.faces.size());
        for (const Simplex& f : c.faces) {
            int fd = A_->cell(f.cell).dim;
            const Simplex& img = levels_[static_cast<std::size_t>(fd)]
                                        [static_cast<std::size_t>(assign_[static_cast<std::size_t>(f.cell)])];
            key.push_back(find_level_index(levels_[static_cast<std::size_t>(c.dim - 1)], act(*X_, img, f.deg)));
        }
        return key;
    }

    bool candidates_exist(int ci) const {
        const auto& table = bnd_[static_cast<std::size_t>(A_->cell(ci).dim)];
        return table.find(pushed_tuple(ci)) != table.end();
    }

    void descend(int pos) {
        if (pos == A_->cell_count()) {
            (*emit_)(assign_);
            return;
        }
        const Cell& c = A_->cell(pos);
        const std::vector<int>* cands = nullptr;
        std::vector<int> vertex_range;
        if (c.dim == 0) {
            vertex_range.resize(levels_[0].size());
            for (std::size_t i = 0; i < vertex_range.size(); ++i) vertex_range[i] = static_cast<int>(i);
            cands = &vertex_range;
        } else {
            const auto& table = bnd_[static_cast<std::size_t>(c.dim)];
            auto it = table.find(pushed_tuple(pos));
            if (it == table.end()) return;
            cands = &it->second;
        }
        for (int xi : *cands) {
            assign_[static_cast<std::size_t>(pos)] = xi;
            bool ok = true;
            for (int s : superfaces_[static_cast<std::size_t>(pos)]) {
                if (--pending_[static_cast<std::size_t>(s)] == 0 && s > pos && ok) ok = candidates_exist(s);
            }
            if (ok) descend(pos + 1);
            for (int s : superfaces_[static_cast<std::size_t>(pos)]) ++pending_[static_cast<std::size_t>(s)];
            assign_[static_cast<std::size_t>(pos)] = -1;
        }
    }

    SSetPtr A_;
    SSetPtr X_;
    int dimA_ = -1;
    std::vector<std::vector<Simplex>> levels_;
    std::vector<std::unordered_map<std::vector<int>, std::vector<int>, IntVecHash>> bnd_;
    std::vector<std::vector<int>> superfaces_;
    std::vector<std::vector<int>> boundary_cells_;
    std::vector<int> assign_;
    std::vector<int> pending_;
    const std::function<void(const std::vector<int>&)>* emit_ = nullptr;
};

}  // namespace

std::vector<SMap> enumerate_maps(const SSetPtr& A, const SSetPtr& X) {
    MapSearch search(A, X);
    std::vector<SMap> out;
    search.run([&](const std::vector<int>& assign) {
        std::vector<Simplex> values;
        values.reserve(assign.size());
        for (int ci = 0; ci < A->cell_count(); ++ci) {
            int d = A->cell(ci).dim;
            values.push_back(search.levels()[static_cast<std::size_t>(d)]
                                            [static_cast<std::size_t>(assign[static_cast<std::size_t>(ci)])]);
        }
        out.push_back(SMap::make_unchecked(A, X, std::move(values)));
    });
    return out;
}

long long count_maps(const SSetPtr& A, const SSetPtr& X) {
    MapSearch search(A, X);
    long long n = 0;
    search.run([&](const std::vector<int>&) { ++n; });
    return n;
}

PrismGeneratorsPtr prism_generators_ptr(int n) {
    return std::make_shared<const PrismGenerators>(prism_generators(n));
}

namespace {

// Enumerates the non-degenerate simplices of X^K as sequences of maps K -> X
// (one per vertex of Delta[n], consecutive entries distinct), for targets
// whose levels are determined by vertex tuples. Every product cell of
// Delta[n] x K maps to an admissible vertex tuple; admissibility is enforced
// on the maximal unit-step staircases, whose faces dominate all other cells.
class SliceEngine {
public:
    SliceEngine(SSetPtr X, SSetPtr K)
        : X_(std::move(X)), K_(std::move(K)), xtuples_(std::make_shared<VertexTupleIndex>(X_)) {
        slices_ = enumerate_maps(K_, X_);
        if (K_->dim() >= 0) {
            std::vector<char> is_face(static_cast<std::size_t>(K_->cell_count()), 0);
            for (int ci = 0; ci < K_->cell_count(); ++ci)
                for (const Simplex& f : K_->cell(ci).faces) is_face[static_cast<std::size_t>(f.cell)] = 1;
            for (int ci = 0; ci < K_->cell_count(); ++ci)
                if (!is_face[static_cast<std::size_t>(ci)]) max_cells_.push_back(K_->cell(ci).vertex_cells);
        }
    }

    const std::vector<SMap>& slices() const { return slices_; }
    const std::shared_ptr<VertexTupleIndex>& tuples() const { return xtuples_; }

    int slice_value(int g, int kvert) const {
        return slices_[static_cast<std::size_t>(g)].assignment()[static_cast<std::size_t>(kvert)].cell;
    }

    void require_determined(int d) {
        if (!xtuples_->determined(d)) throw NotVertexDetermined(d);
    }

    // visitor(seq) is called once per non-degenerate simplex (dim = len-1);
    // return false to stop the whole scan. max_len bounds sequence length.
    void run(int max_len, const std::function<bool(const std::vector<int>&)>& visitor) {
        if (slices_.empty()) return;
        int need = K_->dim() >= 0 ? K_->dim() + 1 : 1;
        for (int d = 0; d <= need; ++d) require_determined(d);
        build_adjacency();
        stop_ = false;
        std::vector<int> seq;
        for (int g = 0; g < static_cast<int>(slices_.size()) && !stop_; ++g) {
            seq.assign(1, g);
            if (!visitor(seq)) {
                stop_ = true;
                break;
            }
            extend(seq, max_len, visitor);
        }
    }

private:
    void build_adjacency() {
        int n = static_cast<int>(slices_.size());
        next_.assign(static_cast<std::size_t>(n), {});
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                if (g == h) continue;
                bool ok = true;
                for (const auto& w : max_cells_) {
                    int e = static_cast<int>(w.size()) - 1;
                    for (int s = 0; s <= e && ok; ++s) {
                        std::vector<int> t;
                        t.reserve(static_cast<std::size_t>(e) + 2);
                        for (int p = 0; p <= s; ++p) t.push_back(slice_value(g, w[static_cast<std::size_t>(p)]));
                        for (int p = s; p <= e; ++p) t.push_back(slice_value(h, w[static_cast<std::size_t>(p)]));
                        ok = xtuples_->contains(e + 1, t);
                    }
                    if (!ok) break;
                }
                if (ok) next_[static_cast<std::size_t>(g)].push_back(h);
            }
    }

    // Poset-likeness up to tuple length depth+1: the level tuple sets coincide
    // with the walks of the vertex-pair relation. While this holds, staircase
    // admissibility is implied by slice validity plus adjacency.
    bool poset_like(int depth) {
        if (pl_failed_) return pl_depth_ >= depth;
        while (pl_depth_ < depth) {
            int d = pl_depth_ + 1;
            if (!xtuples_->determined(d)) {
                pl_failed_ = true;
                return false;
            }
            if (walks_.empty()) {
                int nv = static_cast<int>(X_->cells_of_dim(0).size());
                rel_.assign(static_cast<std::size_t>(nv) * static_cast<std::size_t>(nv), 0);
                for (const Simplex& e : level(*X_, 1)) {
                    std::vector<int> t = vertex_tuple(*X_, e);
                    rel_[static_cast<std::size_t>(t[0]) * static_cast<std::size_t>(nv) +
                         static_cast<std::size_t>(t[1])] = 1;
                }
                walks_.assign(static_cast<std::size_t>(nv), 1);
            }
            int nv = static_cast<int>(walks_.size());
            std::vector<long long> nxt(static_cast<std::size_t>(nv), 0);
            for (int a = 0; a < nv; ++a)
                for (int b = 0; b < nv; ++b)
                    if (rel_[static_cast<std::size_t>(a) * static_cast<std::size_t>(nv) + static_cast<std::size_t>(b)])
                        nxt[static_cast<std::size_t>(b)] += walks_[static_cast<std::size_t>(a)];
            long long total = 0;
            for (long long v : nxt) total += v;
            walks_ = std::move(nxt);
            if (total != level_count(*X_, d)) {
                pl_failed_ = true;
                return false;
            }
            pl_depth_ = d;
        }
        return true;
    }

    // All unit-step staircases over [0..m] x [0..e] ending at the appended
    // slice m, with prefix pruning; a bad prefix is the tuple of a product
    // cell over a front face, so the candidate fails outright.
    bool paths_ok(const std::vector<int>& seq, int h) {
        int m = static_cast<int>(seq.size());
        auto at = [&](int j) { return j < m ? seq[static_cast<std::size_t>(j)] : h; };
        for (const auto& w : max_cells_) {
            int e = static_cast<int>(w.size()) - 1;
            std::vector<int> t;
            std::function<bool(int, int)> go = [&](int j, int p) -> bool {
                t.push_back(slice_value(at(j), w[static_cast<std::size_t>(p)]));
                bool ok = xtuples_->contains(static_cast<int>(t.size()) - 1, t);
                if (ok && !(j == m && p == e)) {
                    if (j < m) ok = go(j + 1, p);
                    if (ok && p < e) ok = go(j, p + 1);
                }
                t.pop_back();
                return ok;
            };
            for (int j0 = 0; j0 <= m; ++j0)
                if (!go(j0, 0)) return false;
        }
        return true;
    }

    void extend(std::vector<int>& seq, int max_len, const std::function<bool(const std::vector<int>&)>& visitor) {
        if (stop_ || static_cast<int>(seq.size()) >= max_len) return;
        int depth_needed = static_cast<int>(seq.size()) + std::max(K_->dim(), 0) + 1;
        require_determined(depth_needed);
        bool skip_paths = poset_like(depth_needed);
        for (int h : next_[static_cast<std::size_t>(seq.back())]) {
            if (stop_) return;
            if (!skip_paths && !paths_ok(seq, h)) continue;
            seq.push_back(h);
            if (!visitor(seq)) {
                stop_ = true;
                seq.pop_back();
                return;
            }
            extend(seq, max_len, visitor);
            seq.pop_back();
        }
    }

    SSetPtr X_;
    SSetPtr K_;
    std::shared_ptr<VertexTupleIndex> xtuples_;
    std::vector<SMap> slices_;
    std::vector<std::vector<int>> max_cells_;
    std::vector<std::vector<int>> next_;
    std::vector<char> rel_;
    std::vector<long long> walks_;
    int pl_depth_ = 0;
    bool pl_failed_ = false;
    bool stop_ = false;
};

std::pair<std::vector<int>, Operator> compress_runs(const std::vector<int>& s) {
    std::vector<int> out;
    std::vector<int> imgs;
    for (int v : s) {
        if (out.empty() || out.back() != v) out.push_back(v);
        imgs.push_back(static_cast<int>(out.size()) - 1);
    }
    return {std::move(out), Operator(std::move(imgs), static_cast<int>(out.size()) - 1)};
}

std::string seq_id(const std::vector<int>& seq) {
    std::string s = "g";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(seq[i]);
    }
    return s;
}

}  // namespace

ExponentialPtr exponential(const SSetPtr& X, const SSetPtr& K, int cap, ExpRoute route) {
    auto out = std::make_shared<Exponential>();
    out->base = X;
    out->exponent = K;

    if (route == ExpRoute::Auto || route == ExpRoute::SliceSequences) {
        try {
            SliceEngine engine(X, K);
            out->cap = cap < 0 ? static_cast<int>(engine.slices().size()) : cap;
            out->route = ExpRoute::SliceSequences;
            std::vector<std::vector<int>> seqs;
            bool complete = true;
            engine.run(out->cap + 2, [&](const std::vector<int>& seq) {
                if (static_cast<int>(seq.size()) > out->cap + 1) {
                    complete = false;  // non-degenerate simplex past the cap
                    return true;
                }
                seqs.push_back(seq);
                if (static_cast<long long>(seqs.size()) > kMaterializeLimit)
                    throw std::runtime_error("exponential: more than " + std::to_string(kMaterializeLimit) +
                                             " cells; use exponential_nonsingular_scan or a smaller cap");
                return true;
            });
            out->complete = complete;
            std::sort(seqs.begin(), seqs.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return seq_id(a) < seq_id(b);
            });
            for (std::size_t i = 0; i < seqs.size(); ++i) out->cell_by_seq_[seqs[i]] = static_cast<int>(i);
            std::vector<Cell> cells;
            cells.reserve(seqs.size());
            for (const auto& seq : seqs) {
                Cell c;
                c.id = seq_id(seq);
                c.dim = static_cast<int>(seq.size()) - 1;
                for (int i = 0; i <= c.dim && c.dim > 0; ++i) {
                    std::vector<int> sub = seq;
                    sub.erase(sub.begin() + i);
                    auto [dedup, pi] = compress_runs(sub);
                    c.faces.push_back(Simplex{out->cell_by_seq_.at(dedup), std::move(pi)});
                }
                cells.push_back(std::move(c));
            }
            out->sset = SSet::make(std::move(cells));
            out->cell_seq_ = std::move(seqs);
            out->slices_ = engine.slices();
            out->xtuples_ = engine.tuples();
            for (std::size_t g = 0; g < out->slices_.size(); ++g)
                out->slice_by_assignment_[out->slices_[g].assignment()] = static_cast<int>(g);
            return out;
        } catch (const NotVertexDetermined&) {
            if (route == ExpRoute::SliceSequences) throw;
            out->cell_by_seq_.clear();
            out->cell_seq_.clear();
            out->slice_by_assignment_.clear();
        }
    }

    out->route = ExpRoute::Levelwise;
    out->slices_ = enumerate_maps(K, X);
    out->cap = cap < 0 ? static_cast<int>(out->slices_.size()) : cap;
    std::vector<std::vector<SMap>> levels;
    std::vector<ProductPtr> products;
    int last_nondeg = -1;
    bool complete = true;
    for (int m = 0; m <= out->cap + 1; ++m) {
        products.push_back(product_ptr(standard_simplex(m), K));
        std::vector<SMap> maps = enumerate_maps(products.back()->sset, X);
        bool any_nondeg = m == 0 && !maps.empty();
        for (std::size_t e = 0; e < maps.size() && m > 0; ++e) {
            bool degen = false;
            for (int i = 0; i < m && !degen; ++i) {
                SMap face = compose(operator_times_one(*products[static_cast<std::size_t>(m - 1)],
                                                       *products[static_cast<std::size_t>(m)], Operator::face(m, i)),
                                    maps[e]);
                SMap back = compose(operator_times_one(*products[static_cast<std::size_t>(m)],
                                                       *products[static_cast<std::size_t>(m - 1)],
                                                       Operator::degeneracy(m - 1, i)),
                                    face);
                if (back == maps[e]) degen = true;
            }
            if (!degen) any_nondeg = true;
        }
        levels.push_back(std::move(maps));
        if (any_nondeg) {
            if (m == out->cap + 1) {
                complete = false;
                levels.pop_back();
                break;
            }
            last_nondeg = m;
        } else if (m >= last_nondeg + 2 && m >= 1) {
            break;  // two fully degenerate levels past the last cell
        }
    }
    out->complete = complete;
    if (last_nondeg < 0) {
        out->sset = SSet::empty();
        out->products_ = std::move(products);
        return out;
    }
    int top = last_nondeg;
    LevelData data;
    data.top = top;
    for (int m = 0; m <= top; ++m)
        data.sizes.push_back(static_cast<long long>(levels[static_cast<std::size_t>(m)].size()));
    auto map_index = [&](int m, const SMap& f) -> long long {
        const auto& lv = levels[static_cast<std::size_t>(m)];
        auto it = std::lower_bound(lv.begin(), lv.end(), f);
        if (it == lv.end() || !(*it == f)) throw std::logic_error("exponential: map not found at level");
        return it - lv.begin();
    };
    data.face = [&](int m, long long e, int i) {
        SMap f = compose(operator_times_one(*products[static_cast<std::size_t>(m - 1)],
                                            *products[static_cast<std::size_t>(m)], Operator::face(m, i)),
                         levels[static_cast<std::size_t>(m)][static_cast<std::size_t>(e)]);
        return map_index(m - 1, f);
    };
    data.degen = [&](int m, long long e, int i) {
        SMap f = compose(operator_times_one(*products[static_cast<std::size_t>(m + 1)],
                                            *products[static_cast<std::size_t>(m)], Operator::degeneracy(m, i)),
                         levels[static_cast<std::size_t>(m)][static_cast<std::size_t>(e)]);
        return map_index(m + 1, f);
    };
    data.name = [&](int m, long long e) { return "f" + std::to_string(m) + "." + std::to_string(e); };
    LevelsResult lr = presentation_from_levels(data);
    out->sset = lr.sset;
    levels.resize(static_cast<std::size_t>(top) + 1);
    out->level_maps_ = std::move(levels);
    out->elem_simplex_ = std::move(lr.elem_simplex);
    out->products_ = std::move(products);
    return out;
}

long long Exponential::vertex_count() const { return static_cast<long long>(slices_.size()); }

ProductPtr Exponential::level_product(int n) const {
    if (static_cast<int>(products_.size()) <= n) products_.resize(static_cast<std::size_t>(n) + 1);
    if (!products_[static_cast<std::size_t>(n)])
        products_[static_cast<std::size_t>(n)] = product_ptr(standard_simplex(n), exponent);
    return products_[static_cast<std::size_t>(n)];
}

SMap Exponential::map_of_cell(int ci) const {
    int d = sset->cell(ci).dim;
    ProductPtr P = level_product(d);
    if (route == ExpRoute::SliceSequences) {
        const std::vector<int>& seq = cell_seq_[static_cast<std::size_t>(ci)];
        std::vector<Simplex> assign;
        assign.reserve(static_cast<std::size_t>(P->sset->cell_count()));
        for (int pc = 0; pc < P->sset->cell_count(); ++pc) {
            const auto& [a, b] = P->components(pc);
            Operator ma = monotone_of_simplex(*P->left, a);
            std::vector<int> kverts = vertex_tuple(*exponent, b);
            std::vector<int> t;
            t.reserve(kverts.size());
            for (std::size_t p = 0; p < kverts.size(); ++p) {
                int g = seq[static_cast<std::size_t>(ma(static_cast<int>(p)))];
                t.push_back(slices_[static_cast<std::size_t>(g)]
                                .assignment()[static_cast<std::size_t>(kverts[p])]
                                .cell);
            }
            const Simplex* s = xtuples_->lookup(P->sset->cell(pc).dim, t);
            if (!s) throw std::logic_error("exponential: missing tuple for product cell");
            assign.push_back(*s);
        }
        return SMap::make(P->sset, base, std::move(assign));
    }
    for (std::size_t e = 0; e < elem_simplex_[static_cast<std::size_t>(d)].size(); ++e)
        if (elem_simplex_[static_cast<std::size_t>(d)][e] == Simplex{ci, Operator::identity(d)})
            return level_maps_[static_cast<std::size_t>(d)][e];
    throw std::logic_error("exponential: cell has no level element");
}

Simplex Exponential::simplex_of_map(const SMap& f) const {
    ProductPtr P;
    int n = -1;
    for (int m = 0; m < static_cast<int>(products_.size()); ++m) {
        if (products_[static_cast<std::size_t>(m)] &&
            products_[static_cast<std::size_t>(m)]->sset.get() == f.src().get()) {
            P = products_[static_cast<std::size_t>(m)];
            n = m;
            break;
        }
    }
    if (!P)
        throw std::invalid_argument(
            "simplex_of_map: the source must be a level_product of this exponential");
    if (route == ExpRoute::SliceSequences) {
        std::vector<int> seq;
        for (int j = 0; j <= n; ++j) {
            std::vector<Simplex> slice_assign;
            for (int kc = 0; kc < exponent->cell_count(); ++kc) {
                int kd = exponent->cell(kc).dim;
                Operator const_j(std::vector<int>(static_cast<std::size_t>(kd) + 1, j), n);
                slice_assign.push_back(
                    f.push(P->pair(simplex_of_monotone(*P->left, const_j), cell_simplex(*exponent, kc))));
            }
            auto it = slice_by_assignment_.find(slice_assign);
            if (it == slice_by_assignment_.end()) throw std::logic_error("simplex_of_map: unknown slice");
            seq.push_back(it->second);
        }
        auto [dedup, pi] = compress_runs(seq);
        auto it = cell_by_seq_.find(dedup);
        if (it == cell_by_seq_.end()) throw std::invalid_argument("simplex_of_map: the map lies beyond the cap");
        return Simplex{it->second, std::move(pi)};
    }
    if (n >= static_cast<int>(level_maps_.size()))
        throw std::invalid_argument("simplex_of_map: level beyond the cap");
    const auto& lv = level_maps_[static_cast<std::size_t>(n)];
    auto it = std::lower_bound(lv.begin(), lv.end(), f);
    if (it == lv.end() || !(*it == f)) throw std::logic_error("simplex_of_map: map not found");
    return elem_simplex_[static_cast<std::size_t>(n)][static_cast<std::size_t>(it - lv.begin())];
}

ExpScanReport exponential_nonsingular_scan(const SSetPtr& X, const SSetPtr& K) {
    SliceEngine engine(X, K);
    ExpScanReport report;
    engine.run(static_cast<int>(engine.slices().size()) + 1, [&](const std::vector<int>& seq) {
        ++report.cells;
        int d = static_cast<int>(seq.size()) - 1;
        if (static_cast<int>(report.cell_dist.size()) <= d)
            report.cell_dist.resize(static_cast<std::size_t>(d) + 1, 0);
        ++report.cell_dist[static_cast<std::size_t>(d)];
        // the vertices of this cell are exactly its entries
        for (std::size_t k = 0; k + 1 < seq.size(); ++k)
            for (std::size_t l = k + 1; l < seq.size(); ++l)
                if (seq[k] == seq[l]) {
                    report.nonsingular = false;
                    report.witness_dim = d;
                    report.witness_k = static_cast<int>(k);
                    report.witness_l = static_cast<int>(l);
                    return false;
                }
        return true;
    });
    return report;
}

SMap curry(const SMap& f, const Product& XK, const Exponential& YK) {
    if (f.src().get() != XK.sset.get()) throw std::invalid_argument("curry: map is not out of the given product");
    if (XK.right.get() != YK.exponent.get()) throw std::invalid_argument("curry: exponent mismatch");
    if (f.dst().get() != YK.base.get()) throw std::invalid_argument("curry: target mismatch");
    const SSetPtr& X = XK.left;
    if (YK.cap < X->dim())
        throw std::invalid_argument("curry: exponential cap too small for the source dimension");
    std::vector<Simplex> assign;
    for (int ci = 0; ci < X->cell_count(); ++ci) {
        int d = X->cell(ci).dim;
        ProductPtr P = YK.level_product(d);
        std::vector<Simplex> values;
        values.reserve(static_cast<std::size_t>(P->sset->cell_count()));
        for (int pc = 0; pc < P->sset->cell_count(); ++pc) {
            const auto& [a, b] = P->components(pc);
            Simplex xa = act(*X, cell_simplex(*X, ci), monotone_of_simplex(*P->left, a));
            values.push_back(f.push(XK.pair(xa, b)));
        }
        SMap phi = SMap::make_unchecked(P->sset, f.dst(), std::move(values));
        assign.push_back(YK.simplex_of_map(phi));
    }
    return SMap::make(X, YK.sset, std::move(assign));
}

SMap uncurry(const SMap& g, const Product& XK, const Exponential& YK) {
    if (g.dst().get() != YK.sset.get()) throw std::invalid_argument("uncurry: map is not into the exponential");
    if (XK.right.get() != YK.exponent.get()) throw std::invalid_argument("uncurry: exponent mismatch");
    if (g.src().get() != XK.left.get()) throw std::invalid_argument("uncurry: source mismatch");
    std::vector<Simplex> assign;
    for (int ci = 0; ci < XK.sset->cell_count(); ++ci) {
        const auto& [x, b] = XK.components(ci);
        int d = XK.left->cell(x.cell).dim;
        const Simplex& val = g.assignment()[static_cast<std::size_t>(x.cell)];
        ProductPtr Pd = YK.level_product(d);
        ProductPtr Pv = YK.level_product(val.deg.to());
        SMap psi = YK.map_of_cell(val.cell);
        SMap phi = compose(operator_times_one(*Pd, *Pv, val.deg), psi);
        assign.push_back(phi.push(Pd->pair(simplex_of_monotone(*Pd->left, x.deg), b)));
    }
    return SMap::make(XK.sset, YK.base, std::move(assign));
}

PrismSimplex PrismSimplex::make(PrismGeneratorsPtr gens, SSetPtr X, std::vector<Simplex> values) {
    PrismSimplex out;
    out.gens_ = std::move(gens);
    out.X_ = std::move(X);
    out.values_ = std::move(values);
    int n = out.n();
    if (n != out.gens_->n) throw std::invalid_argument("prism simplex: generator count mismatch");
    for (const Simplex& v : out.values_)
        if (v.dim() != n + 1) throw std::invalid_argument("prism simplex: value dimension mismatch");
    for (int j = 0; j < n; ++j) {
        Operator d = Operator::face(n + 1, j + 1);
        if (!(act(*out.X_, out.values_[static_cast<std::size_t>(j)], d) ==
              act(*out.X_, out.values_[static_cast<std::size_t>(j + 1)], d)))
            throw std::invalid_argument("prism simplex: gluing relation fails at j=" + std::to_string(j));
    }
    return out;
}

PrismSimplex PrismSimplex::from_map(PrismGeneratorsPtr gens, const SMap& phi) {
    int n = gens->n;
    std::string top = "0";
    for (int t = 1; t <= n + 1; ++t) top += "-" + std::to_string(t);
    Simplex top_cell = cell_simplex(*gens->simplex_n1, gens->simplex_n1->cell_index(top));
    std::vector<Simplex> values;
    for (int j = 0; j <= n; ++j)
        values.push_back(phi.push(gens->gamma[static_cast<std::size_t>(j)].push(top_cell)));
    SSetPtr target = phi.dst();
    return make(std::move(gens), target, std::move(values));
}

SMap PrismSimplex::to_map() const {
    std::vector<Simplex> assign;
    for (int ci = 0; ci < gens_->prism->sset->cell_count(); ++ci)
        assign.push_back(eval(cell_simplex(*gens_->prism->sset, ci)));
    return SMap::make(gens_->prism->sset, X_, std::move(assign));
}

Simplex PrismSimplex::eval(const Simplex& s) const {
    // write the carrier cell as a face of some generator, then push through it
    const auto& [a, b] = gens_->prism->components(s.cell);
    Operator ma = monotone_of_simplex(*gens_->prism->left, a);
    Operator mb = monotone_of_simplex(*gens_->prism->right, b);
    int e = ma.from();
    int j = 0;
    for (int t = 0; t <= e; ++t)
        if (mb(t) == 0) j = std::max(j, ma(t));
    std::vector<int> mu;
    mu.reserve(static_cast<std::size_t>(e) + 1);
    for (int t = 0; t <= e; ++t) mu.push_back(mb(t) == 0 ? ma(t) : ma(t) + 1);
    Simplex at_cell = act(*X_, values_[static_cast<std::size_t>(j)], Operator(std::move(mu), n() + 1));
    return act(*X_, at_cell, s.deg);
}

PrismSimplex PrismSimplex::acted(const Operator& alpha, const PrismGeneratorsPtr& source_gens) const {
    if (alpha.to() != n() || source_gens->n != alpha.from())
        throw std::invalid_argument("prism simplex act: operator shape mismatch");
    int m = alpha.from();
    std::vector<Simplex> values;
    for (int j = 0; j <= m; ++j) {
        // the composite of the j-th generator with alpha x 1 is the pair
        // (alpha . sigma_j, step_j)
        Operator first = compose(Operator::degeneracy(m, j), alpha);
        std::vector<int> step;
        for (int i = 0; i <= m + 1; ++i) step.push_back(i <= j ? 0 : 1);
        Simplex s = gens_->prism->pair(simplex_of_monotone(*gens_->prism->left, first),
                                       simplex_of_monotone(*gens_->prism->right, Operator(std::move(step), 1)));
        values.push_back(eval(s));
    }
    return make(source_gens, X_, std::move(values));
}

Simplex PrismSimplex::edge_at(int j) const {
    Operator const_j({j, j}, n());
    Simplex s = gens_->prism->pair(simplex_of_monotone(*gens_->prism->left, const_j),
                                   simplex_of_monotone(*gens_->prism->right, Operator::identity(1)));
    return eval(s);
}

Simplex PrismSimplex::vertex_restriction(int i) const {
    if (i == 0) return act(*X_, values_[static_cast<std::size_t>(n())], Operator::face(n() + 1, n() + 1));
    if (i == 1) return act(*X_, values_[0], Operator::face(n() + 1, 0));
    throw std::invalid_argument("vertex_restriction: endpoint must be 0 or 1");
}

std::vector<PrismSimplex> prism_simplices(const SSetPtr& X, int n) {
    PrismGeneratorsPtr gens = prism_generators_ptr(n);
    std::vector<PrismSimplex> out;
    for (const SMap& f : enumerate_maps(gens->prism->sset, X)) out.push_back(PrismSimplex::from_map(gens, f));
    return out;
}

PrismSimplex collapse_prism_simplex(const PrismSimplex& phi, int k) {
    int n = phi.n();
    if (k < 0 || k >= n) throw std::invalid_argument("collapse_prism_simplex: need 0 <= k < n");
    if (!(phi.edge_at(k) == phi.edge_at(k + 1)))
        throw std::invalid_argument("collapse_prism_simplex: adjacent vertices differ");
    if (!is_nonsingular(phi.target()).nonsingular)
        throw std::invalid_argument("collapse_prism_simplex: target is singular");
    const SSet& X = *phi.target();
    Operator dk1 = Operator::face(n + 1, k + 1);
    if (!(act(X, phi.values()[static_cast<std::size_t>(k)], dk1) ==
          act(X, phi.values()[static_cast<std::size_t>(k + 1)], dk1)))
        throw std::logic_error("collapse_prism_simplex: the shared face is ambiguous");
    std::vector<Simplex> psi;
    for (int j = 0; j <= n - 1; ++j)
        psi.push_back(act(X, phi.values()[static_cast<std::size_t>(j <= k ? j : j + 1)], dk1));
    PrismGeneratorsPtr small = prism_generators_ptr(n - 1);
    PrismSimplex result = [&] {
        try {
            return PrismSimplex::make(small, phi.target(), std::move(psi));
        } catch (const std::invalid_argument& e) {
            throw std::logic_error(std::string("collapse_prism_simplex: gluing must hold: ") + e.what());
        }
    }();
    PrismSimplex recomposed = result.acted(Operator::degeneracy(n - 1, k), phi.gens());
    if (!(recomposed == phi)) throw std::logic_error("collapse_prism_simplex: recomposition fails");
    return result;
}

bool check_vertex_propagation(const PrismSimplex& phi, int k, int l) {
    int n = phi.n();
    if (!(0 <= k && k < l && l <= n)) throw std::invalid_argument("check_vertex_propagation: need 0 <= k < l <= n");
    if (!(phi.edge_at(k) == phi.edge_at(l)))
        throw std::invalid_argument("check_vertex_propagation: the named vertices differ");
    if (!is_nonsingular(phi.target()).nonsingular)
        throw std::invalid_argument("check_vertex_propagation: target is singular");
    const SSet& X = *phi.target();
    PrismGeneratorsPtr square_gens = prism_generators_ptr(1);
    for (int j = k; j < l; ++j) {
        Operator mu({j, j + 1}, n);
        PrismSimplex square = phi.acted(mu, square_gens);
        Simplex z0 = square.values()[0];
        Simplex z1 = square.values()[1];
        // both triangles are forced degenerate with the stated witnesses
        Simplex w0 = act(X, z0, Operator::face(2, 2));
        Simplex w1 = act(X, z1, Operator::face(2, 0));
        if (!(act(X, w0, Operator::degeneracy(1, 1)) == z0)) return false;
        if (!(act(X, w1, Operator::degeneracy(1, 0)) == z1)) return false;
        if (!(w0 == phi.edge_at(j))) return false;
        if (!(w1 == phi.edge_at(j + 1))) return false;
        // they share the diagonal, which pins the two vertical edges together
        if (!(act(X, z0, Operator::face(2, 1)) == act(X, z1, Operator::face(2, 1)))) return false;
        if (!(phi.edge_at(j) == phi.edge_at(j + 1))) return false;
    }
    return true;
}

}  // namespace nonsing
