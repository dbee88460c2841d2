#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "quon/error.hpp"
#include "quon/matrix.hpp"
#include "quon/mpoly.hpp"
#include "quon/upoly.hpp"

namespace quon {

// Permutation of [n] in one-line notation: perm[k] is the image of k+1,
// values 1..n.
using Permutation = std::vector<int>;

inline void validate_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 1 || static_cast<std::size_t>(v) > p.size() || seen[static_cast<std::size_t>(v) - 1])
            throw Error("not a permutation in one-line notation");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

inline Permutation inverse_permutation(const Permutation& p) {
    Permutation inv(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) inv[static_cast<std::size_t>(p[k]) - 1] = static_cast<int>(k) + 1;
    return inv;
}

inline Permutation identity_permutation(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return p;
}

// All permutations of [n] in lexicographic order; the canonical basis order
// for chamber-indexed matrices.
inline std::vector<Permutation> permutations_lex(int n) {
    if (n < 0) throw Error("negative size");
    Permutation p = identity_permutation(n);
    std::vector<Permutation> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

// Pairing of two chambers: the product of q[sigma(i)][sigma(j)] over the
// pairs i < j whose relative order sigma and tau disagree on, i.e. over the
// hyperplanes separating the two chambers.
inline MPoly am_form(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw SizeMismatch("am_form requires permutations of equal size");
    validate_permutation(sigma);
    validate_permutation(tau);
    const Permutation tau_inv = inverse_permutation(tau);
    const std::size_t n = sigma.size();
    Monomial m = Monomial::one();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            int si = sigma[i], sj = sigma[j];
            if (tau_inv[static_cast<std::size_t>(si) - 1] > tau_inv[static_cast<std::size_t>(sj) - 1])
                m = m * Monomial::var(VarId(si, sj));
        }
    }
    return MPoly::monomial(m);
}

inline constexpr int kMaxGammaSize = 6;

// Matrix of the chamber pairing over all n! chambers in lexicographic order:
// entry (r, c) = am_form(perm_r, perm_c). Diagonal entries are 1.
inline Matrix<MPoly> gamma_matrix(int n) {
    if (n < 1) throw Error("gamma_matrix requires n >= 1");
    if (n > kMaxGammaSize) throw ResourceLimit("gamma_matrix limited to n <= 6");
    const std::vector<Permutation> perms = permutations_lex(n);
    Matrix<MPoly> g(perms.size(), perms.size());
    for (std::size_t r = 0; r < perms.size(); ++r)
        for (std::size_t c = 0; c < perms.size(); ++c) g.at(r, c) = am_form(perms[r], perms[c]);
    return g;
}

// Multiset word: letters are positive integers, repeats allowed.
using MultisetWord = std::vector<int>;

// Sum of the chamber pairing over the fiber of permutations whose letterwise
// projection is sigma_dot, with variables carrying the projected values:
//   sum over s with dot(s) = sigma_dot of
//     prod over i < j with tau^-1(s(i)) > tau^-1(s(j)) of
//       q[sigma_dot(i)][sigma_dot(j)].
// The value does not depend on which member of tau's fiber is passed; that
// invariance is the coset-constancy property verified in the test suite.
inline MPoly coset_sum_form(const MultisetWord& sigma_dot, const Permutation& tau) {
    if (sigma_dot.size() != tau.size())
        throw SizeMismatch("coset_sum_form requires words of equal length");
    validate_permutation(tau);
    const std::size_t n = sigma_dot.size();
    for (int v : sigma_dot)
        if (v < 1) throw Error("word letters must be positive integers");

    // Positions of the sorted multiset word grouped by value: position p
    // carries value sorted[p], and a fiber member assigns to each slot k a
    // distinct position carrying value sigma_dot[k].
    MultisetWord sorted = sigma_dot;
    std::sort(sorted.begin(), sorted.end());
    std::map<int, std::vector<int>> positions_by_value;
    for (std::size_t p = 0; p < n; ++p)
        positions_by_value[sorted[p]].push_back(static_cast<int>(p) + 1);

    std::map<int, std::vector<std::size_t>> slots_by_value;
    for (std::size_t k = 0; k < n; ++k) slots_by_value[sigma_dot[k]].push_back(k);

    const Permutation tau_inv = inverse_permutation(tau);
    MPoly acc;
    // Enumerate the fiber as independent assignments per value class.
    std::vector<std::pair<std::vector<std::size_t>, std::vector<int>>> classes;
    for (auto& [value, slots] : slots_by_value) {
        auto it = positions_by_value.find(value);
        classes.emplace_back(slots, it->second);
    }
    Permutation s(n);
    auto emit = [&]() {
        Monomial m = Monomial::one();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (tau_inv[static_cast<std::size_t>(s[i]) - 1] >
                    tau_inv[static_cast<std::size_t>(s[j]) - 1])
                    m = m * Monomial::var(VarId(sigma_dot[i], sigma_dot[j]));
            }
        }
        acc += MPoly::monomial(m);
    };
    auto rec = [&](auto&& self, std::size_t ci) -> void {
        if (ci == classes.size()) {
            emit();
            return;
        }
        auto& [slots, positions] = classes[ci];
        std::vector<int> arrangement = positions;  // sorted ascending
        do {
            for (std::size_t k = 0; k < slots.size(); ++k) s[slots[k]] = arrangement[k];
            self(self, ci + 1);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    };
    rec(rec, 0);
    return acc;
}

// Ordered set partition of [n]: the faces of the arrangement. Blocks are
// disjoint, nonempty, internally sorted, and ordered.
struct OrderedSetPartition {
    std::vector<std::vector<int>> blocks;

    std::size_t ground_size() const {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.size();
        return n;
    }

    bool is_chamber() const {
        for (const auto& b : blocks)
            if (b.size() != 1) return false;
        return true;
    }

    void validate() const {
        std::vector<int> all;
        for (const auto& b : blocks) {
            if (b.empty()) throw Error("ordered set partition with an empty block");
            if (!std::is_sorted(b.begin(), b.end())) throw Error("block not sorted");
            all.insert(all.end(), b.begin(), b.end());
        }
        std::vector<int> sorted = all;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
            if (sorted[k] != static_cast<int>(k) + 1)
                throw Error("blocks must partition 1..n");
    }

    friend bool operator==(const OrderedSetPartition& a, const OrderedSetPartition& b) {
        return a.blocks == b.blocks;
    }
    friend bool operator!=(const OrderedSetPartition& a, const OrderedSetPartition& b) {
        return !(a == b);
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i > 0) s += ",";
            s += "{";
            for (std::size_t k = 0; k < blocks[i].size(); ++k) {
                if (k > 0) s += ",";
                s += std::to_string(blocks[i][k]);
            }
            s += "}";
        }
        return s + ")";
    }
};

inline OrderedSetPartition chamber_of(const Permutation& sigma) {
    validate_permutation(sigma);
    OrderedSetPartition f;
    for (int v : sigma) f.blocks.push_back({v});
    return f;
}

inline OrderedSetPartition central_face(int n) {
    OrderedSetPartition f;
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    f.blocks.push_back(std::move(all));
    return f;
}

// Face monoid product: the sign vector of FG takes F's sign on every
// hyperplane where F is nonzero and G's sign elsewhere. Concretely each block
// of F splits into its intersections with G's blocks, taken in G's order.
inline OrderedSetPartition face_product(const OrderedSetPartition& f, const OrderedSetPartition& g) {
    f.validate();
    g.validate();
    if (f.ground_size() != g.ground_size())
        throw SizeMismatch("face product requires partitions of the same ground set");
    OrderedSetPartition out;
    for (const auto& fb : f.blocks) {
        for (const auto& gb : g.blocks) {
            std::vector<int> inter;
            std::set_intersection(fb.begin(), fb.end(), gb.begin(), gb.end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) out.blocks.push_back(std::move(inter));
        }
    }
    return out;
}

// Weight of a face: the product of q[s][t]*q[t][s] over all pairs contained
// in a common block, i.e. over the hyperplanes containing the face. Chambers
// are assigned weight 0 by convention, so their interval factor is 1.
inline MPoly face_weight(const OrderedSetPartition& f) {
    f.validate();
    if (f.is_chamber()) return MPoly::zero();
    Monomial m = Monomial::one();
    for (const auto& b : f.blocks) {
        for (std::size_t x = 0; x < b.size(); ++x) {
            for (std::size_t y = x + 1; y < b.size(); ++y) {
                m = m * Monomial::var(VarId(b[x], b[y])) * Monomial::var(VarId(b[y], b[x]));
            }
        }
    }
    return MPoly::monomial(m);
}

inline constexpr int kMaxFaceEnumeration = 8;

// All faces in the closed interval from the central face to the chamber of
// sigma: exactly the 2^(n-1) coarsenings of sigma's chamber obtained by
// merging consecutive entries, enumerated by composition of n.
inline std::vector<OrderedSetPartition> faces_below_chamber(const Permutation& sigma) {
    validate_permutation(sigma);
    const std::size_t n = sigma.size();
    if (n < 1) throw Error("faces_below_chamber requires n >= 1");
    if (n > static_cast<std::size_t>(kMaxFaceEnumeration))
        throw ResourceLimit("face enumeration limited to n <= 8");
    std::vector<OrderedSetPartition> faces;
    const std::size_t masks = std::size_t(1) << (n - 1);
    for (std::size_t mask = 0; mask < masks; ++mask) {
        // Bit k set means a block boundary between positions k and k+1.
        OrderedSetPartition f;
        std::vector<int> block;
        for (std::size_t k = 0; k < n; ++k) {
            block.push_back(sigma[k]);
            if (k + 1 == n || (mask >> k) & 1) {
                std::sort(block.begin(), block.end());
                f.blocks.push_back(block);
                block.clear();
            }
        }
        faces.push_back(std::move(f));
    }
    return faces;
}

inline constexpr int kMaxDeltaExpanded = 5;

// Factors (1 - b_K) of the interval product, one per face strictly between
// the central face and the chamber, plus the central face itself. The
// chamber's factor is 1 and is omitted.
inline std::vector<MPoly> delta_interval_factors(const Permutation& sigma) {
    std::vector<MPoly> factors;
    for (const auto& f : faces_below_chamber(sigma)) {
        if (f.is_chamber()) continue;
        factors.push_back(MPoly::one() - face_weight(f));
    }
    return factors;
}

// Expanded interval product over all faces below the chamber of sigma. The
// expanded form over 2^(n-1) binomial factors is only representable for
// small n; the factored and one-parameter forms go further.
inline MPoly delta_interval(const Permutation& sigma) {
    if (sigma.size() > static_cast<std::size_t>(kMaxDeltaExpanded))
        throw ResourceLimit("expanded interval product limited to n <= 5; use the factored form");
    MPoly acc = MPoly::one();
    for (const auto& f : delta_interval_factors(sigma)) acc *= f;
    return acc;
}

// Interval product in the one-parameter specialization q[i][j] -> q, kept
// factored: a face with w hyperplanes through it contributes (1 - q^(2w)).
inline FactoredUPoly delta_interval_specialized(const Permutation& sigma) {
    FactoredUPoly out;
    for (const auto& f : faces_below_chamber(sigma)) {
        if (f.is_chamber()) continue;
        out.multiply_by(face_weight(f).total_degree());
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

// Closed form for the interval product that counts i faces per dimension i,
//   prod over i in [n-1] of (1 - q^((n-i)^2 + (n-i)))^i.
// The literal face enumeration can find more faces than this count; at n = 4
// it picks up one extra (1 - q^4) factor. Callers compare the two routes and
// report that difference rather than reconcile it.
inline FactoredUPoly corollary_delta_closed_form(int n) {
    if (n < 1) throw Error("corollary_delta_closed_form requires n >= 1");
    FactoredUPoly out;
    for (int i = 1; i <= n - 1; ++i) {
        int d = (n - i) * (n - i) + (n - i);
        out.multiply_by(d, i);
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

// A flat of the arrangement: the subsets of [n] of size >= 2, carrying the
// weight prod_{ {i,j} in K } q[i][j] q[j][i] and the multiplicity
// (|K| - 2)! (n - |K| + 1)! with which its factor enters the determinant.
struct Flat {
    std::vector<int> subset;
    MPoly weight;
    long multiplicity = 0;
};

namespace detail {

inline long factorial(int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

inline MPoly subset_weight(const std::vector<int>& subset) {
    Monomial m = Monomial::one();
    for (std::size_t x = 0; x < subset.size(); ++x)
        for (std::size_t y = x + 1; y < subset.size(); ++y)
            m = m * Monomial::var(VarId(subset[x], subset[y])) *
                Monomial::var(VarId(subset[y], subset[x]));
    return MPoly::monomial(m);
}

}  // namespace detail

inline constexpr int kMaxFlatEnumeration = 8;

// All flats for the determinant factorization over the ground set J of
// distinct positive values (positions or values alike).
inline std::vector<Flat> flats_of(const std::vector<int>& ground) {
    const int n = static_cast<int>(ground.size());
    if (n < 1) throw Error("flats require a nonempty ground set");
    if (n > kMaxFlatEnumeration) throw ResourceLimit("flat enumeration limited to n <= 8");
    {
        std::vector<int> sorted = ground;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("ground set must have distinct values");
        for (int v : sorted)
            if (v < 1) throw Error("ground set values must be positive");
    }
    std::vector<Flat> flats;
    const std::size_t masks = std::size_t(1) << n;
    for (std::size_t mask = 0; mask < masks; ++mask) {
        std::vector<int> subset;
        for (int k = 0; k < n; ++k)
            if ((mask >> k) & 1) subset.push_back(ground[static_cast<std::size_t>(k)]);
        if (subset.size() < 2) continue;
        std::sort(subset.begin(), subset.end());
        Flat f;
        f.weight = detail::subset_weight(subset);
        f.multiplicity = detail::factorial(static_cast<int>(subset.size()) - 2) *
                         detail::factorial(n - static_cast<int>(subset.size()) + 1);
        f.subset = std::move(subset);
        flats.push_back(std::move(f));
    }
    std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
        if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
        return a.subset < b.subset;
    });
    return flats;
}

inline std::vector<Flat> flats_and_multiplicities(int n) {
    if (n < 2) throw Error("flats_and_multiplicities requires n >= 2");
    std::vector<int> ground(static_cast<std::size_t>(n));
    std::iota(ground.begin(), ground.end(), 1);
    return flats_of(ground);
}

// Closed-form determinant of the Gram block on a set J, kept factored:
//   prod over flats K of (1 - weight(K))^multiplicity(K).
struct ClosedFormDet {
    std::vector<Flat> flats;

    std::size_t ground_size() const {
        std::size_t n = 0;
        for (const auto& f : flats) n = std::max(n, f.subset.size());
        return n;
    }

    MPoly expand() const;

    // One-parameter specialization q[i][j] -> q of the factored form.
    FactoredUPoly specialized() const {
        FactoredUPoly out;
        for (const auto& f : flats)
            out.multiply_by(f.weight.total_degree(), static_cast<int>(f.multiplicity));
        std::sort(out.factors.begin(), out.factors.end());
        return out;
    }

    GaussianRational eval(const Assignment& point) const {
        GaussianRational acc(Rational(1));
        for (const auto& f : flats) {
            GaussianRational base = GaussianRational(Rational(1)) - mpoly_eval(f.weight, point);
            for (long e = 0; e < f.multiplicity; ++e) acc *= base;
        }
        return acc;
    }

    std::string to_string() const {
        if (flats.empty()) return "1";
        std::string s;
        for (const auto& f : flats) {
            if (!s.empty()) s += " * ";
            s += "(" + (MPoly::one() - f.weight).to_string() + ")";
            if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
        }
        return s;
    }
};

inline constexpr int kMaxClosedFormExpansion = 3;

inline MPoly ClosedFormDet::expand() const {
    if (ground_size() > static_cast<std::size_t>(kMaxClosedFormExpansion))
        throw ResourceLimit("closed-form expansion limited to sets of size <= 3; factored form available");
    MPoly p = MPoly::one();
    for (const auto& f : flats)
        p *= (MPoly::one() - f.weight).pow(static_cast<int>(f.multiplicity));
    return p;
}

inline ClosedFormDet det_closed_form(const std::vector<int>& ground) {
    if (ground.size() < 2) {
        // No flats: the determinant of a 0x0 or 1x1 block is 1.
        ClosedFormDet empty;
        if (ground.size() == 1 && ground[0] < 1) throw Error("ground set values must be positive");
        return empty;
    }
    return ClosedFormDet{flats_of(ground)};
}

}  // namespace quon
