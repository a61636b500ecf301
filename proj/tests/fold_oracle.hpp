#ifndef MRNAOPT_TESTS_FOLD_ORACLE_HPP
#define MRNAOPT_TESTS_FOLD_ORACLE_HPP

// Exhaustive structure enumeration and an independent loop-decomposition
// energy, used to cross-check the folding DP on short sequences. Shares the
// EnergyModel tables with the implementation but none of its recursions.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mrnaopt/folding.hpp"

namespace fold_oracle {

constexpr int kInf = 100000000;

using PairList = std::vector<std::pair<int, int>>;

inline std::vector<PairList> all_structures(const std::string& s, int hairpin_min, int i, int j) {
    if (i >= j)
        return {PairList{}};
    std::vector<PairList> out = all_structures(s, hairpin_min, i + 1, j); // i unpaired
    for (int k = i + hairpin_min + 1; k <= j; ++k) {
        if (mrnaopt::pair_type(s[i], s[k]) < 0)
            continue;
        auto inside = all_structures(s, hairpin_min, i + 1, k - 1);
        auto outside = all_structures(s, hairpin_min, k + 1, j);
        for (const auto& a : inside) {
            for (const auto& b : outside) {
                PairList combo;
                combo.reserve(1 + a.size() + b.size());
                combo.emplace_back(i, k);
                combo.insert(combo.end(), a.begin(), a.end());
                combo.insert(combo.end(), b.begin(), b.end());
                out.push_back(std::move(combo));
            }
        }
    }
    return out;
}

inline std::vector<PairList> all_structures(const std::string& s, int hairpin_min) {
    return all_structures(s, hairpin_min, 0, static_cast<int>(s.size()) - 1);
}

/// Energy of one complete structure by explicit loop decomposition,
/// in integer hundredths of kcal/mol; kInf marks a disallowed structure.
inline int structure_energy_cents(const std::string& s, const PairList& pairs,
                                  const mrnaopt::EnergyModel& m) {
    const int n = static_cast<int>(s.size());
    std::vector<int> partner(n, -1);
    for (auto [i, j] : pairs) {
        partner[i] = j;
        partner[j] = i;
    }
    long long total = 0;
    for (auto [i, j] : pairs) {
        int children = 0, unpaired = 0;
        int first_child_i = -1, last_child_j = -1;
        int t = i + 1;
        while (t < j) {
            if (partner[t] > t) {
                if (children == 0)
                    first_child_i = t;
                last_child_j = partner[t];
                ++children;
                t = partner[t] + 1;
            } else {
                ++unpaired;
                ++t;
            }
        }
        if (children == 0) {
            int e = m.hairpin_cents(j - i - 1);
            if (e >= kInf)
                return kInf;
            total += e;
        } else if (children == 1) {
            int l = first_child_i - i - 1;
            int r = j - last_child_j - 1;
            if (l == 0 && r == 0) {
                total += m.stack_cents(mrnaopt::pair_type(s[i], s[j]),
                                       mrnaopt::pair_type(s[first_child_i], s[last_child_j]));
            } else if (l + r > m.max_interior_span) {
                return kInf;
            } else if (l == 0 || r == 0) {
                total += m.bulge_cents(l + r);
            } else {
                total += m.internal_cents(l + r);
            }
        } else {
            total += m.ml_close_cents + static_cast<long long>(m.ml_branch_cents) * (children + 1) +
                     static_cast<long long>(m.ml_unpaired_cents) * unpaired;
        }
    }
    return static_cast<int>(total);
}

/// Minimum energy over all structures (empty structure = 0).
inline int min_energy_cents(const std::string& s, const mrnaopt::EnergyModel& m) {
    int best = 0;
    for (const auto& pairs : all_structures(s, m.hairpin_min)) {
        int e = structure_energy_cents(s, pairs, m);
        if (e < best)
            best = e;
    }
    return best;
}

/// Maximum number of pairs over all structures.
inline int max_pairs(const std::string& s, int hairpin_min) {
    std::size_t best = 0;
    for (const auto& pairs : all_structures(s, hairpin_min))
        best = std::max(best, pairs.size());
    return static_cast<int>(best);
}

// deterministic RNG for test inputs
struct Lcg {
    std::uint64_t s;
    std::uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
    int below(int n) { return static_cast<int>((next() >> 33) % n); }
    std::string random_seq(int min_len, int max_len) {
        static const char bases[] = "ACGT";
        int len = min_len + below(max_len - min_len + 1);
        std::string s;
        for (int i = 0; i < len; ++i)
            s.push_back(bases[below(4)]);
        return s;
    }
};

} // namespace fold_oracle

#endif
