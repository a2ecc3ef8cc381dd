#include "nonsing/sset.hpp"

#include <algorithm>
#include <stdexcept>

namespace nonsing {

namespace {

// Peels the highest missed value off an injective operator: mono = face(to, j) . rest.
std::pair<int, Operator> split_top_face(const Operator& mono) {
    std::vector<int> missed = missed_values(mono);
    int j = missed.back();
    std::vector<int> imgs;
    imgs.reserve(mono.images().size());
    for (int v : mono.images()) imgs.push_back(v > j ? v - 1 : v);
    return {j, Operator(std::move(imgs), mono.to() - 1)};
}

}  // namespace

SSetPtr SSet::empty() { return make({}); }

SSetPtr SSet::make(std::vector<Cell> cells) {
    auto X = std::shared_ptr<SSet>(new SSet());
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.id < b.id;
    });
    X->cells_ = std::move(cells);
    for (int i = 0; i < static_cast<int>(X->cells_.size()); ++i) {
        const Cell& c = X->cells_[static_cast<std::size_t>(i)];
        if (c.id.empty()) throw std::invalid_argument("sset: empty cell id");
        if (!X->by_id_.emplace(c.id, i).second)
            throw std::invalid_argument("sset: duplicate cell id '" + c.id + "'");
        X->dim_ = std::max(X->dim_, c.dim);
    }
    X->by_dim_.assign(static_cast<std::size_t>(X->dim_ + 1), {});
    for (int i = 0; i < static_cast<int>(X->cells_.size()); ++i)
        X->by_dim_[static_cast<std::size_t>(X->cells_[static_cast<std::size_t>(i)].dim)].push_back(i);

    // Shape checks before any act() call.
    for (const Cell& c : X->cells_) {
        std::size_t want = c.dim == 0 ? 0 : static_cast<std::size_t>(c.dim) + 1;
        if (c.faces.size() != want)
            throw std::invalid_argument("sset: cell '" + c.id + "' has wrong face count");
        for (const Simplex& f : c.faces) {
            if (f.cell < 0 || f.cell >= static_cast<int>(X->cells_.size()))
                throw std::invalid_argument("sset: cell '" + c.id + "' has dangling face reference");
            const Cell& fc = X->cells_[static_cast<std::size_t>(f.cell)];
            if (!f.deg.is_surjective())
                throw std::invalid_argument("sset: cell '" + c.id + "' face degeneracy not surjective");
            if (f.deg.to() != fc.dim || f.deg.from() != c.dim - 1)
                throw std::invalid_argument("sset: cell '" + c.id + "' face dimension mismatch");
            if (fc.dim >= c.dim)
                throw std::invalid_argument("sset: cell '" + c.id + "' face of equal or larger dimension");
        }
    }

    // Simplicial identity, by increasing dimension: for i < j,
    // (c.delta_j).delta_i == (c.delta_i).delta_{j-1}.
    for (int d = 0; d <= X->dim_; ++d) {
        for (int ci : X->by_dim_[static_cast<std::size_t>(d)]) {
            Cell& c = X->cells_[static_cast<std::size_t>(ci)];
            for (int i = 0; i < d && d >= 2; ++i)
                for (int j = i + 1; j <= d; ++j) {
                    Simplex a = act(*X, c.faces[static_cast<std::size_t>(j)], Operator::face(d - 1, i));
                    Simplex b = act(*X, c.faces[static_cast<std::size_t>(i)], Operator::face(d - 1, j - 1));
                    if (!(a == b))
                        throw std::invalid_argument("sset: simplicial identity fails at cell '" + c.id +
                                                    "' (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
                }
            c.vertex_cells.clear();
            if (d == 0) {
                c.vertex_cells.push_back(ci);
            } else {
                for (int i = 0; i <= d; ++i) {
                    Simplex v = act(*X, Simplex{ci, Operator::identity(d)}, Operator::vertex(d, i));
                    c.vertex_cells.push_back(v.cell);
                }
            }
        }
    }
    return X;
}

const std::vector<int>& SSet::cells_of_dim(int d) const {
    static const std::vector<int> none;
    if (d < 0 || d > dim_) return none;
    return by_dim_[static_cast<std::size_t>(d)];
}

int SSet::cell_index(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? -1 : it->second;
}

std::vector<int> SSet::cell_dist() const {
    std::vector<int> out;
    for (int d = 0; d <= dim_; ++d) out.push_back(static_cast<int>(cells_of_dim(d).size()));
    return out;
}

bool SSet::operator==(const SSet& other) const {
    if (cells_.size() != other.cells_.size()) return false;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Cell& a = cells_[i];
        const Cell& b = other.cells_[i];
        if (a.id != b.id || a.dim != b.dim || a.faces != b.faces) return false;
    }
    return true;
}

Simplex cell_simplex(const SSet& X, int cell) {
    return Simplex{cell, Operator::identity(X.cell(cell).dim)};
}

// Evaluates cell . mono by peeling elementary faces through boundary tables.
static Simplex face_of_cell(const SSet& X, int cell, const Operator& mono) {
    if (mono.is_identity()) return cell_simplex(X, cell);
    auto [j, rest] = split_top_face(mono);
    const Simplex& fj = X.cell(cell).faces[static_cast<std::size_t>(j)];
    return act(X, fj, rest);
}

Simplex act(const SSet& X, const Simplex& x, const Operator& alpha) {
    if (alpha.to() != x.dim())
        throw std::invalid_argument("act: operator codomain " + std::to_string(alpha.to()) +
                                    " != simplex dimension " + std::to_string(x.dim()));
    EpiMonoParts parts = epi_mono_factor(compose(alpha, x.deg));
    Simplex base = parts.mono.is_identity() ? Simplex{x.cell, Operator::identity(x.deg.to())}
                                            : face_of_cell(X, x.cell, parts.mono);
    if (parts.epi.is_identity()) return base;
    return Simplex{base.cell, compose(parts.epi, base.deg)};
}

std::vector<Simplex> vertices(const SSet& X, const Simplex& x) {
    std::vector<Simplex> out;
    out.reserve(static_cast<std::size_t>(x.dim()) + 1);
    const Cell& c = X.cell(x.cell);
    for (int i = 0; i <= x.dim(); ++i)
        out.push_back(Simplex{c.vertex_cells[static_cast<std::size_t>(x.deg(i))], Operator::identity(0)});
    return out;
}

bool is_injective_representing_map(const SSet& X, const Simplex& x) {
    std::vector<Simplex> vs = vertices(X, x);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j]) return false;
    return true;
}

std::vector<Simplex> level(const SSet& X, int m) {
    std::vector<Simplex> out;
    for (int d = 0; d <= std::min(m, X.dim()); ++d)
        for (int ci : X.cells_of_dim(d))
            for (const Operator& rho : all_surjections(m, d)) out.push_back(Simplex{ci, rho});
    std::sort(out.begin(), out.end());
    return out;
}

long long level_count(const SSet& X, int m) {
    auto binom = [](int n, int k) {
        if (k < 0 || k > n) return 0LL;
        long long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    long long total = 0;
    for (int d = 0; d <= std::min(m, X.dim()); ++d)
        total += static_cast<long long>(X.cells_of_dim(d).size()) * binom(m, d);
    return total;
}

std::string simplex_key(const SSet& X, const Simplex& x) {
    std::string s = X.cell(x.cell).id;
    s += ':';
    for (std::size_t i = 0; i < x.deg.images().size(); ++i) {
        if (i) s += '.';
        s += std::to_string(x.deg.images()[i]);
    }
    return s;
}

SMap::SMap(SSetPtr src, SSetPtr dst, std::vector<Simplex> assignment)
    : src_(std::move(src)), dst_(std::move(dst)), assignment_(std::move(assignment)) {}

SMap SMap::make_unchecked(SSetPtr src, SSetPtr dst, std::vector<Simplex> assignment) {
    return SMap(std::move(src), std::move(dst), std::move(assignment));
}

SMap SMap::make(SSetPtr src, SSetPtr dst, std::vector<Simplex> assignment) {
    if (static_cast<int>(assignment.size()) != src->cell_count())
        throw std::invalid_argument("smap: assignment size != cell count");
    for (int ci = 0; ci < src->cell_count(); ++ci) {
        const Cell& c = src->cell(ci);
        const Simplex& y = assignment[static_cast<std::size_t>(ci)];
        if (y.cell < 0 || y.cell >= dst->cell_count() || y.dim() != c.dim || !y.deg.is_surjective() ||
            y.deg.to() != dst->cell(y.cell).dim)
            throw std::invalid_argument("smap: bad value on cell '" + c.id + "'");
    }
    SMap f(std::move(src), std::move(dst), std::move(assignment));
    for (int ci = 0; ci < f.src_->cell_count(); ++ci) {
        const Cell& c = f.src_->cell(ci);
        for (int i = 0; i <= c.dim && c.dim > 0; ++i) {
            Simplex lhs = act(*f.dst_, f.assignment_[static_cast<std::size_t>(ci)], Operator::face(c.dim, i));
            Simplex rhs = f.push(c.faces[static_cast<std::size_t>(i)]);
            if (!(lhs == rhs))
                throw std::invalid_argument("smap: not natural at cell '" + c.id + "' face " + std::to_string(i));
        }
    }
    return f;
}

SMap SMap::identity(SSetPtr X) {
    std::vector<Simplex> assign;
    for (int ci = 0; ci < X->cell_count(); ++ci) assign.push_back(cell_simplex(*X, ci));
    return SMap(X, X, std::move(assign));
}

Simplex SMap::push(const Simplex& x) const {
    const Simplex& y = assignment_[static_cast<std::size_t>(x.cell)];
    if (x.deg.is_identity()) return y;
    return act(*dst_, y, x.deg);
}

bool SMap::operator==(const SMap& other) const {
    return src_.get() == other.src_.get() && dst_.get() == other.dst_.get() && assignment_ == other.assignment_;
}

bool SMap::operator<(const SMap& other) const { return assignment_ < other.assignment_; }

SMap compose(const SMap& first, const SMap& second) {
    if (first.dst().get() != second.src().get())
        throw std::invalid_argument("compose(smap): middle objects differ");
    std::vector<Simplex> assign;
    assign.reserve(first.assignment().size());
    for (const Simplex& y : first.assignment()) assign.push_back(second.push(y));
    return SMap::make_unchecked(first.src(), second.dst(), std::move(assign));
}

std::vector<int> vertex_tuple(const SSet& X, const Simplex& x) {
    const Cell& c = X.cell(x.cell);
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(x.dim()) + 1);
    for (int i = 0; i <= x.dim(); ++i) t.push_back(c.vertex_cells[static_cast<std::size_t>(x.deg(i))]);
    return t;
}

void VertexTupleIndex::ensure(int d) {
    while (static_cast<int>(tables_.size()) <= d) {
        int m = static_cast<int>(tables_.size());
        tables_.emplace_back();
        determined_.push_back(1);
        auto& tab = tables_.back();
        for (const Simplex& x : level(*X_, m)) {
            auto [it, fresh] = tab.emplace(vertex_tuple(*X_, x), x);
            (void)it;
            if (!fresh) determined_.back() = 0;
        }
    }
}

bool VertexTupleIndex::determined(int d) {
    ensure(d);
    return determined_[static_cast<std::size_t>(d)] != 0;
}

const Simplex* VertexTupleIndex::lookup(int d, const std::vector<int>& t) {
    ensure(d);
    auto it = tables_[static_cast<std::size_t>(d)].find(t);
    return it == tables_[static_cast<std::size_t>(d)].end() ? nullptr : &it->second;
}

bool VertexTupleIndex::contains(int d, const std::vector<int>& t) { return lookup(d, t) != nullptr; }

long long VertexTupleIndex::size(int d) {
    ensure(d);
    return static_cast<long long>(tables_[static_cast<std::size_t>(d)].size());
}

bool is_iso(const SMap& f) {
    const SSet& A = *f.src();
    const SSet& B = *f.dst();
    if (A.cell_count() != B.cell_count()) return false;
    std::vector<int> inverse(static_cast<std::size_t>(B.cell_count()), -1);
    for (int ci = 0; ci < A.cell_count(); ++ci) {
        const Simplex& y = f.assignment()[static_cast<std::size_t>(ci)];
        if (!y.deg.is_identity()) return false;
        if (inverse[static_cast<std::size_t>(y.cell)] != -1) return false;
        inverse[static_cast<std::size_t>(y.cell)] = ci;
    }
    // Inverse assignment must itself be natural.
    std::vector<Simplex> inv_assign;
    for (int bi = 0; bi < B.cell_count(); ++bi)
        inv_assign.push_back(cell_simplex(A, inverse[static_cast<std::size_t>(bi)]));
    try {
        (void)SMap::make(f.dst(), f.src(), std::move(inv_assign));
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

bool is_degreewise_surjective(const SMap& f, int max_dim) {
    for (int m = 0; m <= max_dim; ++m) {
        std::vector<Simplex> hit;
        for (const Simplex& x : level(*f.src(), m)) hit.push_back(f.push(x));
        std::sort(hit.begin(), hit.end());
        hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
        if (static_cast<long long>(hit.size()) != level_count(*f.dst(), m)) return false;
    }
    return true;
}

bool is_degreewise_injective(const SMap& f, int max_dim) {
    for (int m = 0; m <= max_dim; ++m) {
        std::vector<Simplex> img;
        std::vector<Simplex> lv = level(*f.src(), m);
        for (const Simplex& x : lv) img.push_back(f.push(x));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (img.size() != lv.size()) return false;
    }
    return true;
}

}  // namespace nonsing
