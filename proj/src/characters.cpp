#include "isospec/characters.hpp"

#include <algorithm>
#include <numeric>

namespace isospec {

namespace {

// Beta numbers lambda_i + (r-1-i), strictly decreasing.
std::vector<int> beta_numbers(const std::vector<int>& shape) {
    const int r = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < r; ++i) beta[static_cast<size_t>(i)] = shape[static_cast<size_t>(i)] + (r - 1 - i);
    return beta;
}

std::vector<int> shape_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int r = static_cast<int>(beta.size());
    std::vector<int> shape;
    for (int i = 0; i < r; ++i) {
        const int part = beta[static_cast<size_t>(i)] - (r - 1 - i);
        if (part > 0) shape.push_back(part);
    }
    return shape;
}

}  // namespace

Int CharacterEngine::character(const Partition& lambda, const CycleType& mu) {
    if (lambda.m() != mu.m())
        throw std::invalid_argument("character: |lambda| != |mu| (" + lambda.str() + " vs " +
                                    mu.partition().str() + ")");
    if (lambda.m() == 0) return 1;
    std::vector<int> cycles = mu.partition().parts();
    std::sort(cycles.begin(), cycles.end(), std::greater<int>());
    auto [it, inserted] = cycle_ids_.try_emplace(cycles, static_cast<uint32_t>(cycle_ids_.size()));
    return eval(lambda.parts(), cycles, it->second, 0);
}

Int CharacterEngine::eval(const std::vector<int>& shape, const std::vector<int>& cycles,
                          uint32_t cycles_id, uint32_t index) {
    if (index == cycles.size()) return shape.empty() ? 1 : 0;
    Key key{cycles_id, index, shape};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int hook = cycles[index];
    const std::vector<int> beta = beta_numbers(shape);
    Int total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        const int nb = beta[i] - hook;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int height = 0;
        for (int b : beta)
            if (nb < b && b < beta[i]) ++height;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        const Int sub = eval(shape_from_beta(std::move(nbeta)), cycles, cycles_id, index + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
}

Int CharacterEngine::dimension(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const Partition conj = lambda.conjugate();
    Int hooks = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            const int arm = parts[i] - j - 1;
            const int leg = conj[static_cast<size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(static_cast<unsigned>(lambda.m())) / hooks;
}

bool CharacterEngine::is_faithful(const Partition& lambda) {
    const Int dim = dimension(lambda);
    for (const Partition& mu : enumerate_partitions(lambda.m())) {
        const CycleType type(mu);
        if (type.is_identity()) continue;
        if (character(lambda, type) == dim) return false;
    }
    return true;
}

}  // namespace isospec
