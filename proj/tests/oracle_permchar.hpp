#pragma once

// Test-only oracle for Sym(m) characters, independent of the rim-hook
// engine: permutation-module characters (tabloid fixed-point counts)
// decomposed by exact Gram-Schmidt against the class-weighted inner product.

#include "isospec/partition.hpp"

#include <map>
#include <vector>

namespace oracle {

using isospec::CycleType;
using isospec::Int;
using isospec::Partition;

// Number of tabloids of shape lambda fixed by a permutation of cycle type mu:
// assignments of the cycles to rows filling each row exactly.
inline Int perm_module_character(const Partition& lambda, const Partition& mu) {
    const std::vector<int>& rows = lambda.parts();
    const std::vector<int>& cycles = mu.parts();
    std::map<std::pair<size_t, std::vector<int>>, Int> memo;
    auto rec = [&](auto&& self, size_t idx, std::vector<int> caps) -> Int {
        if (idx == cycles.size()) return 1;
        const auto key = std::make_pair(idx, caps);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Int total = 0;
        for (size_t r = 0; r < caps.size(); ++r) {
            if (caps[r] < cycles[idx]) continue;
            caps[r] -= cycles[idx];
            total += self(self, idx + 1, caps);
            caps[r] += cycles[idx];
        }
        memo.emplace(key, total);
        return total;
    };
    return rec(rec, 0, rows);
}

// Full character table of Sym(m), rows indexed like enumerate_partitions(m).
// chi_lambda = phi_lambda - sum over earlier nu of <phi_lambda, chi_nu> chi_nu,
// valid because reverse-lexicographic order extends dominance.
inline std::vector<std::vector<Int>> character_table(int m) {
    const std::vector<Partition> parts = isospec::enumerate_partitions(m);
    const size_t n = parts.size();
    std::vector<Int> class_sizes(n);
    for (size_t c = 0; c < n; ++c) class_sizes[c] = CycleType(parts[c]).class_size();
    const Int order = isospec::factorial(static_cast<unsigned>(m));

    auto inner = [&](const std::vector<Int>& f, const std::vector<Int>& g) {
        Int s = 0;
        for (size_t c = 0; c < n; ++c) s += class_sizes[c] * f[c] * g[c];
        if (s % order != 0) throw std::logic_error("oracle: non-integral inner product");
        return s / order;
    };

    std::vector<std::vector<Int>> chi;
    for (size_t i = 0; i < n; ++i) {
        std::vector<Int> row(n);
        for (size_t c = 0; c < n; ++c) row[c] = perm_module_character(parts[i], parts[c]);
        for (const auto& prev : chi) {
            const Int k = inner(row, prev);
            for (size_t c = 0; c < n; ++c) row[c] -= k * prev[c];
        }
        chi.push_back(std::move(row));
    }
    return chi;
}

}  // namespace oracle
