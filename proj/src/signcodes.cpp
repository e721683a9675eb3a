#include "isospec/signcodes.hpp"

#include <algorithm>
#include <stdexcept>

namespace isospec {

SignVector SignVector::from_entries(const std::array<int, 6>& entries) {
    std::bitset<6> bits;
    for (size_t i = 0; i < 6; ++i) {
        if (entries[i] == -1)
            bits.set(i);
        else if (entries[i] != 1)
            throw std::invalid_argument("SignVector: entries must be +1 or -1");
    }
    return SignVector(bits);
}

SignVector SignVector::permuted(const std::array<int, 6>& perm) const {
    std::bitset<6> out;
    for (size_t i = 0; i < 6; ++i) out[i] = bits_[static_cast<size_t>(perm[i])];
    return SignVector(out);
}

std::string SignVector::str() const {
    std::string out = "(";
    for (size_t i = 0; i < 6; ++i) {
        if (i) out += ",";
        out += bits_[i] ? "-1" : "1";
    }
    return out + ")";
}

SignCodeGroup SignCodeGroup::from_codewords(std::set<SignVector> codewords) {
    if (!codewords.count(SignVector()))
        throw std::invalid_argument("SignCodeGroup: missing identity codeword");
    for (const SignVector& x : codewords)
        for (const SignVector& y : codewords)
            if (!codewords.count(x * y))
                throw std::invalid_argument("SignCodeGroup: not closed under products");
    SignCodeGroup g;
    g.codewords_ = std::move(codewords);
    return g;
}

bool SignCodeGroup::all_weights_even() const {
    return std::all_of(codewords_.begin(), codewords_.end(),
                       [](const SignVector& v) { return v.in_so6(); });
}

std::map<int, int> SignCodeGroup::weight_enumerator() const {
    std::map<int, int> out;
    for (const SignVector& v : codewords_) ++out[v.weight()];
    return out;
}

SignCodeGroup SignCodeGroup::permuted(const std::array<int, 6>& perm) const {
    std::set<SignVector> out;
    for (const SignVector& v : codewords_) out.insert(v.permuted(perm));
    return from_codewords(std::move(out));
}

std::pair<SignCodeGroup, SignCodeGroup> so6_counterexample_pair() {
    auto make = [](std::initializer_list<std::array<int, 6>> rows) {
        std::set<SignVector> words;
        for (const auto& row : rows) words.insert(SignVector::from_entries(row));
        return SignCodeGroup::from_codewords(std::move(words));
    };
    SignCodeGroup g1 = make({{1, 1, 1, 1, 1, 1},
                             {-1, -1, -1, -1, -1, -1},
                             {-1, -1, 1, 1, 1, 1},
                             {-1, 1, -1, 1, 1, 1},
                             {1, -1, -1, 1, 1, 1},
                             {-1, 1, 1, -1, -1, -1},
                             {1, -1, 1, -1, -1, -1},
                             {1, 1, -1, -1, -1, -1}});
    SignCodeGroup g2 = make({{1, 1, 1, 1, 1, 1},
                             {-1, -1, -1, -1, -1, -1},
                             {-1, -1, 1, 1, 1, 1},
                             {1, 1, -1, -1, 1, 1},
                             {1, 1, 1, 1, -1, -1},
                             {-1, -1, -1, -1, 1, 1},
                             {-1, -1, 1, 1, -1, -1},
                             {1, 1, -1, -1, -1, -1}});
    return {std::move(g1), std::move(g2)};
}

bool so6_almost_conjugate(const SignCodeGroup& g1, const SignCodeGroup& g2) {
    if (!g1.all_weights_even() || !g2.all_weights_even())
        throw std::domain_error("so6_almost_conjugate: group not contained in SO(6)");
    return g1.weight_enumerator() == g2.weight_enumerator();
}

std::optional<std::array<int, 6>> permutation_equivalent(const SignCodeGroup& g1,
                                                         const SignCodeGroup& g2) {
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    do {
        if (g1.permuted(perm) == g2) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace isospec
