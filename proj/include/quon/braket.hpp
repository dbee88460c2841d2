#pragma once

#include <map>
#include <utility>
#include <vector>

#include "quon/error.hpp"
#include "quon/mpoly.hpp"

namespace quon {

// A word of operator indices; letters are positive integers.
using Word = std::vector<int>;

// A normally ordered vacuum sandwich: annihilators (i_1..i_s) denote the
// operator product a_{i_s}...a_{i_1}, creators (j_1..j_t) denote
// a+_{j_1}...a+_{j_t}, and the whole word reads
//   <0| a_{i_s}...a_{i_1} a+_{j_1}...a+_{j_t} |0>.
// With this layout a_{i_1} is the first annihilator to reach the creators.
struct QuonWord {
    Word annihilators;
    Word creators;
};

inline constexpr std::size_t kMaxWordLength = 8;

namespace detail {

inline void check_word(const Word& w) {
    if (w.size() > kMaxWordLength) throw ResourceLimit("word length exceeds 8");
    for (int letter : w)
        if (letter < 1) throw Error("word letters must be positive integers");
}

}  // namespace detail

// One step of the commutation relation a_i a+_j = q[i][j] a+_j a_i + delta_ij
// pushed through a creator word: a_i applied to a+_{w_1}...a+_{w_t}|0> is the
// sum over positions u with w_u = i of q[i][w_1]...q[i][w_(u-1)] times the
// creator word with position u removed. The pass-through term vanishes on the
// vacuum.
inline std::vector<std::pair<MPoly, Word>> annihilate_once(int i, const Word& w) {
    if (i < 1) throw Error("word letters must be positive integers");
    detail::check_word(w);
    std::vector<std::pair<MPoly, Word>> out;
    Monomial coeff = Monomial::one();
    for (std::size_t u = 0; u < w.size(); ++u) {
        if (w[u] == i) {
            Word reduced;
            reduced.reserve(w.size() - 1);
            reduced.insert(reduced.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(u));
            reduced.insert(reduced.end(), w.begin() + static_cast<std::ptrdiff_t>(u) + 1, w.end());
            out.emplace_back(MPoly::monomial(coeff), std::move(reduced));
        }
        coeff = coeff * Monomial::var(VarId(i, w[u]));
    }
    return out;
}

// Evaluates the vacuum bra-ket of a quon word by applying the annihilators in
// order. Branches with identical surviving creator words are merged, so
// repeated letters do not blow the state space up. A mismatch of letter
// multisets leaves no branch alive and the result is zero; this emerges from
// the recursion rather than from a shortcut, so it can serve as a check.
inline MPoly braket(const QuonWord& word) {
    detail::check_word(word.annihilators);
    detail::check_word(word.creators);
    std::map<Word, MPoly> states;
    states.emplace(word.creators, MPoly::one());
    for (int i : word.annihilators) {
        std::map<Word, MPoly> next;
        for (const auto& [w, coeff] : states) {
            for (auto& [branch_coeff, reduced] : annihilate_once(i, w)) {
                MPoly contribution = coeff * branch_coeff;
                auto [it, inserted] = next.try_emplace(std::move(reduced), contribution);
                if (!inserted) it->second += contribution;
            }
        }
        states = std::move(next);
        if (states.empty()) return MPoly::zero();
    }
    auto it = states.find(Word{});
    return it == states.end() ? MPoly::zero() : it->second;
}

// Bra-ket of two words of equal length n:
//   braket_pair(tau, sigma) = <0| a_{tau(n)}...a_{tau(1)} a+_{sigma(1)}...a+_{sigma(n)} |0>.
inline MPoly braket_pair(const Word& tau, const Word& sigma) {
    if (tau.size() != sigma.size())
        throw LengthMismatch("braket_pair requires words of equal length");
    return braket(QuonWord{tau, sigma});
}

}  // namespace quon
