#ifndef NONSING_SSET_HPP
#define NONSING_SSET_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nonsing/operators.hpp"

namespace nonsing {

class SSet;
using SSetPtr = std::shared_ptr<const SSet>;

struct IntVecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// A simplex in normal form: a non-degenerate cell acted on by a surjection.
/// `deg` maps [n] onto [cell dim]; every simplex of a presented set is
/// uniquely of this shape.
struct Simplex {
    int cell = -1;
    Operator deg = Operator::identity(0);

    int dim() const { return deg.from(); }
    bool operator==(const Simplex& other) const = default;
    bool operator<(const Simplex& other) const {
        if (cell != other.cell) return cell < other.cell;
        return deg < other.deg;
    }
};

/// A non-degenerate simplex of a presented simplicial set. `faces[i]` is the
/// value of the i-th elementary face; it may be degenerate.
struct Cell {
    std::string id;
    int dim = 0;
    std::vector<Simplex> faces;      // dim+1 entries when dim > 0, none otherwise
    std::vector<int> vertex_cells;   // cached: cell index of each vertex, dim+1 entries
};

/// A finite simplicial set presented by cells and boundary tables.
/// Immutable after construction; cells are sorted by (dim, id).
class SSet {
public:
    /// Validates ids, face shapes and the simplicial identities; throws on failure.
    static SSetPtr make(std::vector<Cell> cells);
    static SSetPtr empty();

    int dim() const { return dim_; }  // -1 for the empty simplicial set
    int cell_count() const { return static_cast<int>(cells_.size()); }
    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(int i) const { return cells_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& cells_of_dim(int d) const;
    int cell_index(const std::string& id) const;  // -1 if absent
    std::vector<int> cell_dist() const;           // cell counts per dimension

    bool operator==(const SSet& other) const;

private:
    friend class SSetBuilder;
    SSet() = default;
    std::vector<Cell> cells_;
    std::unordered_map<std::string, int> by_id_;
    std::vector<std::vector<int>> by_dim_;
    int dim_ = -1;
};

/// The value x . alpha of an operator on a simplex, in normal form.
/// Requires alpha.to() == x.dim().
Simplex act(const SSet& X, const Simplex& x, const Operator& alpha);

/// The n+1 vertices x.eps_0, ..., x.eps_n.
std::vector<Simplex> vertices(const SSet& X, const Simplex& x);

/// True iff the vertices of x are pairwise distinct (equivalently, the
/// representing map of x is degreewise injective).
bool is_injective_representing_map(const SSet& X, const Simplex& x);

Simplex cell_simplex(const SSet& X, int cell);  // (cell, id)

/// All m-simplices, in canonical order (cell index, then degeneracy).
std::vector<Simplex> level(const SSet& X, int m);
long long level_count(const SSet& X, int m);

std::string simplex_key(const SSet& X, const Simplex& x);  // "<cell-id>:<imgs dot-joined>"

/// A simplicial map given by its values on cells. Validated for naturality
/// on construction: faces of assigned values match pushed boundary faces.
class SMap {
public:
    SMap() = default;  // empty placeholder; src()/dst() are null
    static SMap make(SSetPtr src, SSetPtr dst, std::vector<Simplex> assignment);
    static SMap identity(SSetPtr X);
    /// Unchecked variant for internal use where naturality is known.
    static SMap make_unchecked(SSetPtr src, SSetPtr dst, std::vector<Simplex> assignment);

    const SSetPtr& src() const { return src_; }
    const SSetPtr& dst() const { return dst_; }
    const std::vector<Simplex>& assignment() const { return assignment_; }

    /// Image of an arbitrary simplex: f(x.rho) = f(x).rho, renormalized.
    Simplex push(const Simplex& x) const;

    bool operator==(const SMap& other) const;
    bool operator<(const SMap& other) const;  // canonical order, same src/dst assumed

private:
    SMap(SSetPtr src, SSetPtr dst, std::vector<Simplex> assignment);
    SSetPtr src_;
    SSetPtr dst_;
    std::vector<Simplex> assignment_;
};

SMap compose(const SMap& first, const SMap& second);

/// Vertex cell indices of x, in order.
std::vector<int> vertex_tuple(const SSet& X, const Simplex& x);

/// Per-degree index from vertex tuples to simplices. A degree is "determined"
/// when no two distinct simplices share a tuple there; lookups are only
/// meaningful at determined degrees, membership tests always are.
class VertexTupleIndex {
public:
    explicit VertexTupleIndex(SSetPtr X) : X_(std::move(X)) {}

    void ensure(int d);
    bool determined(int d);                                  // calls ensure
    const Simplex* lookup(int d, const std::vector<int>& t);  // nullptr if absent
    bool contains(int d, const std::vector<int>& t);
    long long size(int d);

private:
    SSetPtr X_;
    std::vector<std::unordered_map<std::vector<int>, Simplex, IntVecHash>> tables_;
    std::vector<char> determined_;
};

/// True iff f is an isomorphism of presented sets: a dimension-preserving
/// bijection on cells with identity degeneracy parts and compatible inverse.
bool is_iso(const SMap& f);

/// True iff every m-simplex of dst is hit by push, for all m <= max_dim.
bool is_degreewise_surjective(const SMap& f, int max_dim);
bool is_degreewise_injective(const SMap& f, int max_dim);

}  // namespace nonsing

#endif
