#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qramsey/index_set.hpp"

namespace qramsey {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Visits every k-subset of {0,...,carrier-1} in lexicographic order.
template <class Fn>
void for_each_ksubset(OrdinalIndex carrier, std::size_t k, Fn&& fn) {
    if (k > carrier) return;
    std::vector<OrdinalIndex> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<OrdinalIndex>(i);
    while (true) {
        fn(static_cast<const std::vector<OrdinalIndex>&>(idx));
        // advance odometer
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == carrier - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Deterministic 64-bit mix, used to derive per-key RNG seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// k distinct values below `carrier`, sorted. Sparse Fisher-Yates so the cost
// is O(k) regardless of carrier size. Avoids std::uniform_int_distribution to
// keep streams identical across standard libraries.
inline std::vector<OrdinalIndex> sample_ksubset(OrdinalIndex carrier, std::size_t k,
                                                std::mt19937_64& rng) {
    if (k > carrier) throw std::invalid_argument("sample_ksubset: k exceeds carrier");
    std::unordered_map<OrdinalIndex, OrdinalIndex> swapped;
    auto at = [&](OrdinalIndex i) {
        auto it = swapped.find(i);
        return it == swapped.end() ? i : it->second;
    };
    std::vector<OrdinalIndex> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        OrdinalIndex j =
            static_cast<OrdinalIndex>(i + rng() % (static_cast<std::uint64_t>(carrier) - i));
        out[i] = at(j);
        swapped[j] = at(static_cast<OrdinalIndex>(i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qramsey
