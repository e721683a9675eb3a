#pragma once

#include "isospec/characters.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isospec {

// Isomorphism type of the canonical central Z2-extension associated with an
// orthogonal representation of Sym(m), classified by the orders of the lifts
// of a transposition x and of a product of two disjoint transpositions xy:
// (2,2) -> trivial, (2,4) -> plus, (4,4) -> minus, (4,2) -> L.
enum class ExtensionType { trivial, plus, minus, L };

std::string to_string(ExtensionType t);

enum class LiftElement { transposition, double_transposition };

struct LiftReport {
    bool lands_in_so = false;
    std::optional<int> lift_order_transposition;
    std::optional<int> lift_order_double_transposition;
    ExtensionType extension_type = ExtensionType::trivial;
};

struct AdmissibilityReport {
    Partition partition;
    Int n;  // representation dimension
    bool cond_mod8_x = false;
    bool cond_mod8_xy = false;
    bool cond_M_positive = false;
    bool faithful = false;
    bool admissible = false;
    bool m6_caveat = false;
};

// chi(x) == n mod 4 for a transposition x, i.e. the representation factors
// through SO(n). Requires m >= 2.
bool lands_in_so(CharacterEngine& eng, const Partition& lambda);

// Order (2 or 4) of the lift to Spin(n) of the chosen involution; 2 exactly
// when chi == n mod 8. Precondition: lands_in_so.
int lift_order(CharacterEngine& eng, const Partition& lambda, LiftElement which);

// Extension type from the two mod-8 congruences chi(x) == n and chi(xy) == n.
// When the representation lands in SO(n) these congruences are exactly the
// order-2 conditions for the lifts; the same residue rule is applied to
// classify the pulled-back cover in the general case.
ExtensionType extension_type(CharacterEngine& eng, const Partition& lambda);

LiftReport lift_report(CharacterEngine& eng, const Partition& lambda);

// M(z) = (1/l) sum_{k<l} (-1)^k chi(z^k), l = ord(z); the multiplicity of the
// eigenvalue -1 of rho(z). Requires z odd.
Int multiplicity_M(CharacterEngine& eng, const Partition& lambda, const CycleType& z);

// Evaluates all four admissibility conditions; cond_M_positive quantifies
// over one representative per odd cycle type of Sym(m). Requires m >= 4.
AdmissibilityReport admissibility(CharacterEngine& eng, const Partition& lambda);

// Report for the scaled character k*chi (dimension k*n), k odd; the base
// partition must be admissible.
AdmissibilityReport tensor_scale_check(CharacterEngine& eng, const Partition& lambda, int k);

struct SearchOptions {
    int max_m = 14;
    int jobs = 1;
};

// All admissible partitions of m, sorted by (n, reverse-lexicographic
// partition). m = 6 rows are reported with the m6_caveat flag set.
std::vector<AdmissibilityReport> search(int m, const SearchOptions& options = {});

}  // namespace isospec
