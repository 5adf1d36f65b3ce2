#include "alcove/combinat.hpp"

#include "alcove/errors.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

namespace alcove {

namespace {

void enumerate(int k, bool allow_singleton, uint32_t used, int singleton,
               std::vector<std::pair<int, int>>& acc,
               std::vector<PairPartition>& out) {
    int first = 0;
    for (int i = 1; i <= k; ++i) {
        if (!(used & (1u << i))) {
            first = i;
            break;
        }
    }
    if (first == 0) {
        out.push_back(PairPartition{acc, singleton});
        return;
    }
    if (allow_singleton && singleton == 0) {
        enumerate(k, allow_singleton, used | (1u << first), first, acc, out);
    }
    for (int j = first + 1; j <= k; ++j) {
        if (used & (1u << j)) continue;
        acc.emplace_back(first, j);
        enumerate(k, allow_singleton, used | (1u << first) | (1u << j), singleton, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<PairPartition> pair_partitions(int k) {
    if (k < 2 || k > 12)
        throw invalid_input("pair_partitions: k must be in [2,12], got " + std::to_string(k));
    std::vector<PairPartition> out;
    std::vector<std::pair<int, int>> acc;
    enumerate(k, k % 2 == 1, 0u, 0, acc, out);
    return out;
}

int crossing_number(const PairPartition& p) {
    // Close the singleton (if any) with a virtual partner at position 0,
    // strictly left of everything else.
    std::vector<std::pair<int, int>> pairs = p.pairs;
    if (p.singleton > 0) pairs.emplace_back(0, p.singleton);
    int c = 0;
    for (size_t u = 0; u < pairs.size(); ++u)
        for (size_t v = 0; v < pairs.size(); ++v) {
            if (u == v) continue;
            const auto [a, b] = pairs[u];
            const auto [cc, d] = pairs[v];
            if (a < cc && cc < b && b < d) ++c;
        }
    return c;
}

long long crossing_sign_sum(int k) {
    long long s = 0;
    for (const auto& p : pair_partitions(k)) s += (crossing_number(p) % 2 == 0) ? 1 : -1;
    return s;
}

SkewMatrix::SkewMatrix(int n) : n_(n) {
    if (n < 0) throw invalid_input("SkewMatrix: negative size");
    upper_.assign(static_cast<size_t>(n) * n, 0.0); // simple dense index, diagonal unused
}

size_t SkewMatrix::idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

double SkewMatrix::at(int i, int j) const {
    if (i == j) return 0.0;
    return (i < j) ? upper_[idx(i, j)] : -upper_[idx(j, i)];
}

void SkewMatrix::set(int i, int j, double v) {
    if (i == j) throw invalid_input("SkewMatrix::set: diagonal entries are fixed at 0");
    if (!std::isfinite(v)) throw invalid_input("SkewMatrix::set: non-finite entry");
    if (i < j)
        upper_[idx(i, j)] = v;
    else
        upper_[idx(j, i)] = -v;
}

namespace {

// Expansion along the lowest-index remaining row, memoized on the subset of
// remaining indices.  Number of reachable subsets is far below 2^n for the
// sizes we allow (n <= 20), and each costs O(n).
double pf_rec(const SkewMatrix& a, uint32_t alive,
              std::unordered_map<uint32_t, double>& memo) {
    if (alive == 0) return 1.0;
    auto it = memo.find(alive);
    if (it != memo.end()) return it->second;

    int i = 0;
    while (!(alive & (1u << i))) ++i;
    double s = 0.0;
    double sign = 1.0;
    for (int j = i + 1; j < a.size(); ++j) {
        if (!(alive & (1u << j))) continue;
        const double aij = a.at(i, j);
        if (aij != 0.0)
            s += sign * aij * pf_rec(a, alive & ~(1u << i) & ~(1u << j), memo);
        sign = -sign;
    }
    memo.emplace(alive, s);
    return s;
}

} // namespace

double pfaffian(const SkewMatrix& a) {
    const int n = a.size();
    if (n > 20) throw invalid_input("pfaffian: size capped at 20");
    if (n % 2 == 1) return 0.0;
    std::unordered_map<uint32_t, double> memo;
    const uint32_t alive = (n == 32) ? ~0u : ((1u << n) - 1u);
    return pf_rec(a, alive, memo);
}

double pfaffian_partition_sum(const SkewMatrix& a) {
    const int n = a.size();
    if (n % 2 == 1) return 0.0;
    if (n == 0) return 1.0;
    if (n > 12) throw invalid_input("pfaffian_partition_sum: size capped at 12");
    double s = 0.0;
    for (const auto& p : pair_partitions(n)) {
        double term = (crossing_number(p) % 2 == 0) ? 1.0 : -1.0;
        for (const auto& [i, j] : p.pairs) term *= a.at(i - 1, j - 1);
        s += term;
    }
    return s;
}

double pfaffian_submatrix(const SkewMatrix& a, const std::vector<int>& keep) {
    SkewMatrix sub(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            sub.set(static_cast<int>(i), static_cast<int>(j), a.at(keep[i], keep[j]));
    return pfaffian(sub);
}

} // namespace alcove
