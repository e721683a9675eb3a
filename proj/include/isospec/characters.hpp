#pragma once

#include "isospec/partition.hpp"

#include <map>
#include <unordered_map>
#include <vector>

namespace isospec {

// Exact irreducible characters of Sym(m) via the Murnaghan-Nakayama rule.
//
// Evaluation recurses on rim-hook removals, largest remaining cycle first,
// with memoization keyed on (remaining shape, remaining cycle suffix). The
// engine is cheap to construct; for parallel sweeps use one engine per worker
// (results are schedule-independent either way).
class CharacterEngine {
  public:
    // chi_lambda(mu); requires |lambda| = |mu|.
    Int character(const Partition& lambda, const CycleType& mu);

    // Hook length formula; equals character(lambda, identity).
    static Int dimension(const Partition& lambda);

    // True iff no cycle type other than the identity has chi = dim.
    bool is_faithful(const Partition& lambda);

    size_t memo_size() const { return memo_.size(); }

  private:
    struct Key {
        uint32_t cycles_id;
        uint32_t index;
        std::vector<int> shape;
        bool operator==(const Key& o) const = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            size_t h = k.cycles_id * 0x9e3779b97f4a7c15ull + k.index;
            for (int p : k.shape) h = h * 1000003u + static_cast<size_t>(p);
            return h;
        }
    };

    Int eval(const std::vector<int>& shape, const std::vector<int>& cycles, uint32_t cycles_id,
             uint32_t index);

    std::unordered_map<Key, Int, KeyHash> memo_;
    std::map<std::vector<int>, uint32_t> cycle_ids_;
};

}  // namespace isospec
