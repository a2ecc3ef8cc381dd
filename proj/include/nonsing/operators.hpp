#ifndef NONSING_OPERATORS_HPP
#define NONSING_OPERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nonsing {

/// A monotone map [m] -> [n], stored as its dense image list.
///
/// `images[i]` is the value at i (0 <= i <= m), weakly increasing and
/// bounded by `to`. These are the morphisms of the simplex category;
/// faces are the injective ones, degeneracies the surjective ones.
class Operator {
public:
    Operator(std::vector<int> images, int to);

    static Operator identity(int n);
    /// delta_i : [n-1] -> [n], omits i. Requires n >= 1, 0 <= i <= n.
    static Operator face(int n, int i);
    /// sigma_i : [n+1] -> [n], sends i and i+1 to i. Requires 0 <= i <= n.
    static Operator degeneracy(int n, int i);
    /// eps_i : [0] -> [n], hits i. Requires 0 <= i <= n.
    static Operator vertex(int n, int i);
    /// The proper degeneracy [n] ->> [n-(l-k)] collapsing {k,...,l} to k.
    /// Equals the composite of the elementary degeneracies sigma_k .. sigma_{l-1}.
    static Operator collapse_interval(int n, int k, int l);

    int from() const { return static_cast<int>(images_.size()) - 1; }
    int to() const { return to_; }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    bool is_injective() const;
    bool is_surjective() const;

    bool operator==(const Operator& other) const = default;
    bool operator<(const Operator& other) const;

    std::string str() const;  // e.g. "[0,0,2]->3"

private:
    std::vector<int> images_;
    int to_;
};

/// Diagrammatic composition: apply `first`, then `second`.
/// compose(a, b)(i) = b(a(i)); requires first.to() == second.from().
Operator compose(const Operator& first, const Operator& second);

/// Unique factorization a = mono . epi with epi surjective, mono injective.
struct EpiMonoParts {
    Operator epi;
    Operator mono;
};
EpiMonoParts epi_mono_factor(const Operator& op);

/// The section of a surjection picking the least preimage of each value.
/// compose(result, rho) = id.
Operator minimal_section(const Operator& rho);

/// All sections of a surjection (used to test section-choice independence).
std::vector<Operator> all_sections(const Operator& rho);

/// Indices i such that mono = delta_{i_r} . ... . delta_{i_1} with i_1 < ... < i_r
/// (returned ascending: the values of [n] missed by the injection).
std::vector<int> missed_values(const Operator& mono);

/// Indices i such that epi = sigma_{i_1} . ... . sigma_{i_r} applied top-down
/// (returned ascending: positions j with epi(j) == epi(j+1)).
std::vector<int> collapsed_positions(const Operator& epi);

/// All monotone maps [m] -> [n].
std::vector<Operator> all_operators(int m, int n);
/// All surjective monotone maps [m] ->> [n].
std::vector<Operator> all_surjections(int m, int n);
/// All injective monotone maps [m] -> [n].
std::vector<Operator> all_injections(int m, int n);

}  // namespace nonsing

#endif
