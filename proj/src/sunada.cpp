#include "isospec/sunada.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace isospec {

namespace {

CycleType transposition_type(int m) {
    std::vector<int> parts{2};
    parts.insert(parts.end(), static_cast<size_t>(m - 2), 1);
    return CycleType(Partition(std::move(parts)));
}

CycleType double_transposition_type(int m) {
    std::vector<int> parts{2, 2};
    parts.insert(parts.end(), static_cast<size_t>(m - 4), 1);
    return CycleType(Partition(std::move(parts)));
}

bool congruent_mod8(const Int& a, const Int& b) {
    return (a - b) % 8 == 0;
}

}  // namespace

std::string to_string(ExtensionType t) {
    switch (t) {
        case ExtensionType::trivial: return "trivial";
        case ExtensionType::plus: return "plus";
        case ExtensionType::minus: return "minus";
        case ExtensionType::L: return "L";
    }
    return "?";
}

bool lands_in_so(CharacterEngine& eng, const Partition& lambda) {
    if (lambda.m() < 2) throw std::invalid_argument("lands_in_so: need m >= 2");
    const Int n = CharacterEngine::dimension(lambda);
    const Int chi_x = eng.character(lambda, transposition_type(lambda.m()));
    return (chi_x - n) % 4 == 0;
}

int lift_order(CharacterEngine& eng, const Partition& lambda, LiftElement which) {
    if (!lands_in_so(eng, lambda))
        throw std::domain_error("lift_order: representation does not land in SO(n)");
    const int m = lambda.m();
    if (which == LiftElement::double_transposition && m < 4)
        throw std::invalid_argument("lift_order: need m >= 4 for a double transposition");
    const Int n = CharacterEngine::dimension(lambda);
    const CycleType type =
        which == LiftElement::transposition ? transposition_type(m) : double_transposition_type(m);
    return congruent_mod8(eng.character(lambda, type), n) ? 2 : 4;
}

ExtensionType extension_type(CharacterEngine& eng, const Partition& lambda) {
    if (lambda.m() < 4) throw std::invalid_argument("extension_type: need m >= 4");
    const Int n = CharacterEngine::dimension(lambda);
    const bool x_order2 = congruent_mod8(eng.character(lambda, transposition_type(lambda.m())), n);
    const bool xy_order2 =
        congruent_mod8(eng.character(lambda, double_transposition_type(lambda.m())), n);
    if (x_order2) return xy_order2 ? ExtensionType::trivial : ExtensionType::plus;
    return xy_order2 ? ExtensionType::L : ExtensionType::minus;
}

LiftReport lift_report(CharacterEngine& eng, const Partition& lambda) {
    LiftReport report;
    report.lands_in_so = lands_in_so(eng, lambda);
    report.extension_type = extension_type(eng, lambda);
    if (report.lands_in_so) {
        report.lift_order_transposition = lift_order(eng, lambda, LiftElement::transposition);
        if (lambda.m() >= 4)
            report.lift_order_double_transposition =
                lift_order(eng, lambda, LiftElement::double_transposition);
    }
    return report;
}

Int multiplicity_M(CharacterEngine& eng, const Partition& lambda, const CycleType& z) {
    if (!z.is_odd()) throw std::invalid_argument("multiplicity_M: z must be an odd permutation");
    const long long l = z.order();
    Int sum = 0;
    for (long long k = 0; k < l; ++k) {
        const Int chi = eng.character(lambda, power_cycle_type(z, k));
        sum += (k % 2 == 0) ? chi : -chi;
    }
    if (sum % l != 0) throw std::logic_error("multiplicity_M: alternating sum not divisible by l");
    return sum / l;
}

AdmissibilityReport admissibility(CharacterEngine& eng, const Partition& lambda) {
    const int m = lambda.m();
    if (m < 4) throw std::invalid_argument("admissibility: need m >= 4");
    AdmissibilityReport report;
    report.partition = lambda;
    report.n = CharacterEngine::dimension(lambda);
    report.cond_mod8_x =
        congruent_mod8(eng.character(lambda, transposition_type(m)), report.n);
    report.cond_mod8_xy =
        congruent_mod8(eng.character(lambda, double_transposition_type(m)), report.n);
    report.faithful = eng.is_faithful(lambda);
    report.cond_M_positive = true;
    // One representative per odd cycle type suffices: characters and hence
    // M are class functions.
    for (const Partition& mu : enumerate_partitions(m)) {
        const CycleType z(mu);
        if (!z.is_odd()) continue;
        if (multiplicity_M(eng, lambda, z) <= 0) {
            report.cond_M_positive = false;
            break;
        }
    }
    report.admissible = report.cond_mod8_x && report.cond_mod8_xy && report.cond_M_positive &&
                        report.faithful;
    report.m6_caveat = (m == 6);
    return report;
}

AdmissibilityReport tensor_scale_check(CharacterEngine& eng, const Partition& lambda, int k) {
    if (k <= 0 || k % 2 == 0)
        throw std::invalid_argument("tensor_scale_check: k must be an odd positive integer");
    AdmissibilityReport base = admissibility(eng, lambda);
    if (!base.admissible)
        throw std::domain_error("tensor_scale_check: base partition is not admissible");
    const int m = lambda.m();
    AdmissibilityReport report = base;
    report.n = base.n * k;
    // Scaled character k*chi: the congruences read k*chi == k*n mod 8 and the
    // multiplicities scale to k*M(z) > 0; the kernel is unchanged.
    report.cond_mod8_x =
        congruent_mod8(k * eng.character(lambda, transposition_type(m)), report.n);
    report.cond_mod8_xy =
        congruent_mod8(k * eng.character(lambda, double_transposition_type(m)), report.n);
    report.cond_M_positive = true;
    for (const Partition& mu : enumerate_partitions(m)) {
        const CycleType z(mu);
        if (!z.is_odd()) continue;
        if (k * multiplicity_M(eng, lambda, z) <= 0) {
            report.cond_M_positive = false;
            break;
        }
    }
    report.admissible = report.cond_mod8_x && report.cond_mod8_xy && report.cond_M_positive &&
                        report.faithful;
    return report;
}

std::vector<AdmissibilityReport> search(int m, const SearchOptions& options) {
    if (m < 4) throw std::invalid_argument("search: need m >= 4");
    if (m > options.max_m)
        throw size_limit_error("search: m exceeds cap " + std::to_string(options.max_m));
    const std::vector<Partition> all = enumerate_partitions(m);
    std::vector<std::optional<AdmissibilityReport>> slots(all.size());

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        CharacterEngine eng;
        for (size_t i = 0; i < all.size(); ++i) slots[i] = admissibility(eng, all[i]);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<size_t>(jobs));
        for (int j = 0; j < jobs; ++j) {
            workers.emplace_back([&] {
                CharacterEngine eng;  // per-worker memo table
                for (size_t i = next.fetch_add(1); i < all.size(); i = next.fetch_add(1))
                    slots[i] = admissibility(eng, all[i]);
            });
        }
        for (auto& w : workers) w.join();
    }

    std::vector<AdmissibilityReport> rows;
    for (auto& slot : slots)
        if (slot && slot->admissible) rows.push_back(std::move(*slot));
    std::sort(rows.begin(), rows.end(), [](const AdmissibilityReport& a, const AdmissibilityReport& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.partition < b.partition;
    });
    return rows;
}

}  // namespace isospec
