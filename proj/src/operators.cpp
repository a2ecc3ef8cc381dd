#include "nonsing/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace nonsing {

Operator::Operator(std::vector<int> images, int to) : images_(std::move(images)), to_(to) {
    if (images_.empty()) throw std::invalid_argument("operator: empty image list");
    if (to_ < 0) throw std::invalid_argument("operator: negative codomain");
    int prev = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        int v = images_[i];
        if (v < 0 || v > to_) throw std::invalid_argument("operator: image out of range: " + str());
        if (i > 0 && v < prev) throw std::invalid_argument("operator: images not monotone: " + str());
        prev = v;
    }
}

Operator Operator::identity(int n) {
    std::vector<int> imgs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) imgs[static_cast<std::size_t>(i)] = i;
    return Operator(std::move(imgs), n);
}

Operator Operator::face(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw std::invalid_argument("face: index out of range");
    std::vector<int> imgs;
    imgs.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j <= n; ++j)
        if (j != i) imgs.push_back(j);
    return Operator(std::move(imgs), n);
}

Operator Operator::degeneracy(int n, int i) {
    if (n < 0 || i < 0 || i > n) throw std::invalid_argument("degeneracy: index out of range");
    std::vector<int> imgs;
    imgs.reserve(static_cast<std::size_t>(n) + 2);
    for (int j = 0; j <= n + 1; ++j) imgs.push_back(j <= i ? j : j - 1);
    return Operator(std::move(imgs), n);
}

Operator Operator::vertex(int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("vertex: index out of range");
    return Operator({i}, n);
}

Operator Operator::collapse_interval(int n, int k, int l) {
    if (!(0 <= k && k < l && l <= n)) throw std::invalid_argument("collapse_interval: need 0 <= k < l <= n");
    std::vector<int> imgs;
    imgs.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) imgs.push_back(j <= l ? std::min(j, k) : j - (l - k));
    return Operator(std::move(imgs), n - (l - k));
}

bool Operator::is_identity() const {
    if (from() != to_) return false;
    for (int i = 0; i <= to_; ++i)
        if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

bool Operator::is_injective() const {
    for (std::size_t i = 1; i < images_.size(); ++i)
        if (images_[i] == images_[i - 1]) return false;
    return true;
}

bool Operator::is_surjective() const {
    int next = 0;
    for (int v : images_) {
        if (v == next) ++next;
        else if (v > next) return false;
    }
    return next == to_ + 1;
}

bool Operator::operator<(const Operator& other) const {
    if (to_ != other.to_) return to_ < other.to_;
    return images_ < other.images_;
}

std::string Operator::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(images_[i]);
    }
    s += "]->" + std::to_string(to_);
    return s;
}

Operator compose(const Operator& first, const Operator& second) {
    if (first.to() != second.from())
        throw std::invalid_argument("compose: codomain/domain mismatch: " + first.str() + " then " + second.str());
    std::vector<int> imgs;
    imgs.reserve(static_cast<std::size_t>(first.from()) + 1);
    for (int i = 0; i <= first.from(); ++i) imgs.push_back(second(first(i)));
    return Operator(std::move(imgs), second.to());
}

EpiMonoParts epi_mono_factor(const Operator& op) {
    std::vector<int> values;  // distinct images, increasing
    for (int v : op.images())
        if (values.empty() || values.back() != v) values.push_back(v);
    int mid = static_cast<int>(values.size()) - 1;
    std::vector<int> epi_imgs;
    epi_imgs.reserve(op.images().size());
    int idx = 0;
    for (int v : op.images()) {
        while (values[static_cast<std::size_t>(idx)] != v) ++idx;
        epi_imgs.push_back(idx);
    }
    return {Operator(std::move(epi_imgs), mid), Operator(std::move(values), op.to())};
}

Operator minimal_section(const Operator& rho) {
    if (!rho.is_surjective()) throw std::invalid_argument("minimal_section: operator not surjective");
    std::vector<int> imgs(static_cast<std::size_t>(rho.to()) + 1, -1);
    for (int i = rho.from(); i >= 0; --i) imgs[static_cast<std::size_t>(rho(i))] = i;
    return Operator(std::move(imgs), rho.from());
}

std::vector<Operator> all_sections(const Operator& rho) {
    if (!rho.is_surjective()) throw std::invalid_argument("all_sections: operator not surjective");
    std::vector<std::vector<int>> choices(static_cast<std::size_t>(rho.to()) + 1);
    for (int i = 0; i <= rho.from(); ++i) choices[static_cast<std::size_t>(rho(i))].push_back(i);
    std::vector<Operator> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == choices.size()) {
            out.emplace_back(cur, rho.from());
            return;
        }
        for (int i : choices[v]) {
            if (!cur.empty() && i < cur.back()) continue;  // keep monotone
            cur.push_back(i);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<int> missed_values(const Operator& mono) {
    std::vector<int> out;
    std::size_t at = 0;
    for (int v = 0; v <= mono.to(); ++v) {
        if (at < mono.images().size() && mono.images()[at] == v) ++at;
        else out.push_back(v);
    }
    return out;
}

std::vector<int> collapsed_positions(const Operator& epi) {
    std::vector<int> out;
    for (int j = 0; j < epi.from(); ++j)
        if (epi(j) == epi(j + 1)) out.push_back(j);
    return out;
}

std::vector<Operator> all_operators(int m, int n) {
    std::vector<Operator> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int low) -> void {
        if (static_cast<int>(cur.size()) == m + 1) {
            out.emplace_back(cur, n);
            return;
        }
        for (int v = low; v <= n; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Operator> all_surjections(int m, int n) {
    std::vector<Operator> out;
    if (m < n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int low) -> void {
        int i = static_cast<int>(cur.size());
        if (i == m + 1) {
            out.emplace_back(cur, n);
            return;
        }
        // remaining slots must still cover low..n (or low+1..n after a repeat)
        for (int v = low; v <= std::min(low + 1, n); ++v) {
            if (n - v > m - i) continue;
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    if (m >= 0 && n >= 0) {
        cur.push_back(0);
        rec(rec, 0);
    }
    return out;
}

std::vector<Operator> all_injections(int m, int n) {
    std::vector<Operator> out;
    if (m > n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int low) -> void {
        if (static_cast<int>(cur.size()) == m + 1) {
            out.emplace_back(cur, n);
            return;
        }
        for (int v = low; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace nonsing
