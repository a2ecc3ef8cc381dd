#include "nonsing/levels.hpp"

#include <algorithm>
#include <stdexcept>

namespace nonsing {

LevelsResult presentation_from_levels(const LevelData& data) {
    if (data.top < 0 || data.sizes.empty() || data.sizes[0] == 0) {
        LevelsResult r;
        r.sset = SSet::empty();
        return r;
    }
    struct Proto {
        std::string id;
        int dim;
        std::vector<std::pair<int, long long>> faces;  // (degree m-1, element index)
    };
    std::vector<Proto> protos;
    std::vector<std::vector<Simplex>> norm(static_cast<std::size_t>(data.top) + 1);
    // Simplex.cell holds a *proto* index until the final remap.
    for (int m = 0; m <= data.top; ++m) {
        long long size = data.sizes[static_cast<std::size_t>(m)];
        norm[static_cast<std::size_t>(m)].reserve(static_cast<std::size_t>(size));
        for (long long e = 0; e < size; ++e) {
            bool degenerate = false;
            for (int i = 0; i < m && !degenerate; ++i) {
                long long f = data.face(m, e, i);
                if (data.degen(m - 1, f, i) == e) {
                    const Simplex& sub = norm[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(f)];
                    norm[static_cast<std::size_t>(m)].push_back(
                        Simplex{sub.cell, compose(Operator::degeneracy(m - 1, i), sub.deg)});
                    degenerate = true;
                }
            }
            if (degenerate) continue;
            Proto p;
            p.dim = m;
            p.id = data.name ? data.name(m, e) : "";
            if (p.id.empty())
                p.id = "c" + std::to_string(m) + "." + std::to_string(protos.size());
            for (int i = 0; i <= m && m > 0; ++i) p.faces.emplace_back(m - 1, data.face(m, e, i));
            norm[static_cast<std::size_t>(m)].push_back(
                Simplex{static_cast<int>(protos.size()), Operator::identity(m)});
            protos.push_back(std::move(p));
        }
    }
    // Final cell indices follow (dim, id) order.
    std::vector<int> order(protos.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Proto& pa = protos[static_cast<std::size_t>(a)];
        const Proto& pb = protos[static_cast<std::size_t>(b)];
        if (pa.dim != pb.dim) return pa.dim < pb.dim;
        return pa.id < pb.id;
    });
    std::vector<int> final_of_proto(protos.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        final_of_proto[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);

    std::vector<Cell> cells;
    cells.reserve(protos.size());
    for (int pi : order) {
        const Proto& p = protos[static_cast<std::size_t>(pi)];
        Cell c;
        c.id = p.id;
        c.dim = p.dim;
        for (const auto& [md, fe] : p.faces) {
            Simplex f = norm[static_cast<std::size_t>(md)][static_cast<std::size_t>(fe)];
            f.cell = final_of_proto[static_cast<std::size_t>(f.cell)];
            c.faces.push_back(std::move(f));
        }
        cells.push_back(std::move(c));
    }
    LevelsResult r;
    r.sset = SSet::make(std::move(cells));
    for (auto& lv : norm)
        for (Simplex& s : lv) s.cell = final_of_proto[static_cast<std::size_t>(s.cell)];
    r.elem_simplex = std::move(norm);
    return r;
}

JointSplit joint_degeneracy_split(const Operator& a, const Operator& b) {
    if (a.from() != b.from())
        throw std::invalid_argument("joint_degeneracy_split: domain mismatch");
    int m = a.from();
    std::vector<int> common_imgs;
    common_imgs.reserve(static_cast<std::size_t>(m) + 1);
    int next = 0;
    for (int j = 0; j <= m; ++j) {
        if (j > 0 && a(j) == a(j - 1) && b(j) == b(j - 1)) {
            common_imgs.push_back(next - 1);
        } else {
            common_imgs.push_back(next++);
        }
    }
    Operator common(std::move(common_imgs), next - 1);
    Operator section = minimal_section(common);
    std::vector<int> la, lb;
    la.reserve(static_cast<std::size_t>(next));
    lb.reserve(static_cast<std::size_t>(next));
    for (int v : section.images()) {
        la.push_back(a(v));
        lb.push_back(b(v));
    }
    return {std::move(common), Operator(std::move(la), a.to()), Operator(std::move(lb), b.to())};
}

}  // namespace nonsing
