#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "quon/error.hpp"
#include "quon/gaussian.hpp"
#include "quon/mpoly.hpp"

namespace quon {

// Deterministic seeded generator. The engine sequence is fixed by the
// standard and the integer draws avoid std distributions (whose output is
// implementation-defined), so identical seeds give identical points on every
// platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform on [lo, hi] by rejection.
    int uniform_int(int lo, int hi) {
        if (lo > hi) throw Error("Rng: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x = eng_();
        while (x >= limit) x = eng_();
        return lo + static_cast<int>(x % span);
    }

  private:
    std::mt19937_64 eng_;
};

inline constexpr int kUnitGridDenominator = 5;
inline constexpr int kUnitGridMaxNumerator = 4;

// One coordinate from the grid {-4/5, ..., 4/5}.
inline Rational sample_grid_rational(Rng& rng) {
    return make_rational(rng.uniform_int(-kUnitGridMaxNumerator, kUnitGridMaxNumerator),
                         kUnitGridDenominator);
}

// Complex grid point with |z|^2 < 1, drawn by rejection from the grid square.
inline GaussianRational sample_unit_disc(Rng& rng) {
    for (;;) {
        GaussianRational z(sample_grid_rational(rng), sample_grid_rational(rng));
        if (z.norm2() < 1) return z;
    }
}

// Unconstrained rational with numerator in [-9, 9] and denominator in [1, 9];
// used for polynomial-identity checks where no disc bound applies.
inline Rational sample_free_rational(Rng& rng) {
    return make_rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
}

inline GaussianRational sample_free_gaussian(Rng& rng) {
    return {sample_free_rational(rng), sample_free_rational(rng)};
}

// Assigns an independent unconstrained value to every listed variable.
inline Assignment sample_free_point(const std::vector<VarId>& vars, Rng& rng) {
    Assignment point;
    for (VarId v : vars) point.emplace(v, sample_free_gaussian(rng));
    return point;
}

// Assigns every listed variable an independent value in the open unit disc.
inline Assignment sample_polydisc_point(const std::vector<VarId>& vars, Rng& rng) {
    Assignment point;
    for (VarId v : vars) point.emplace(v, sample_unit_disc(rng));
    return point;
}

// A Hermitian evaluation point: q[j][i] = conj(q[i][j]) with every coordinate
// in the open unit disc. Diagonal variables q[v][v] are therefore real.
struct HermitianPoint {
    Assignment values;

    static HermitianPoint from_assignment(Assignment a) {
        for (const auto& [v, z] : a) {
            auto it = a.find(v.transposed());
            if (it == a.end() || !(it->second == z.conjugate()))
                throw NotHermitian("point must satisfy q[j][i] = conj(q[i][j])");
            if (!(z.norm2() < 1)) throw DiscViolation("point coordinate outside the open unit disc");
        }
        return {std::move(a)};
    }
};

// Samples a Hermitian point covering all pairs over the given values: one
// disc draw per unordered pair v < w (mirrored by conjugation) and one real
// draw per diagonal.
inline HermitianPoint sample_hermitian_point(const std::vector<int>& values, Rng& rng) {
    std::set<int> distinct(values.begin(), values.end());
    Assignment a;
    for (auto it = distinct.begin(); it != distinct.end(); ++it) {
        a.emplace(VarId(*it, *it), GaussianRational(sample_grid_rational(rng)));
        for (auto jt = std::next(it); jt != distinct.end(); ++jt) {
            GaussianRational z = sample_unit_disc(rng);
            a.emplace(VarId(*it, *jt), z);
            a.emplace(VarId(*jt, *it), z.conjugate());
        }
    }
    return HermitianPoint::from_assignment(std::move(a));
}

// Zero assignment for every variable occurring in the given polynomials.
template <typename PolyRange>
Assignment zero_point_for(const PolyRange& polys) {
    Assignment point;
    for (const auto& p : polys)
        for (VarId v : p.variables()) point.emplace(v, GaussianRational());
    return point;
}

}  // namespace quon
