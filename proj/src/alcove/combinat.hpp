#pragma once

// Pair partitions of {1..k} (with one singleton when k is odd), their
// crossing numbers, and Pfaffians of skew-symmetric matrices.  These are the
// combinatorial backbone of the exit-probability formulas: survival
// probabilities are signed sums over pair partitions, and the even-k case
// collapses to a Pfaffian.

#include <cstdint>
#include <utility>
#include <vector>

namespace alcove {

// A partition of {1..k} into unordered pairs, plus a single leftover element
// when k is odd.  Pairs are stored as (i, j) with i < j, sorted by i.
// Indices are 1-based to match the usual notation.
struct PairPartition {
    std::vector<std::pair<int, int>> pairs;
    int singleton = 0; // 0 when k is even
};

// All pair partitions of {1..k}, deterministic order (recursive: the
// smallest free index is first offered the singleton role when k is odd and
// it is still available, then paired with each larger free index in
// ascending order).  Sizes: (k-1)!! for even k, k!! for odd k.
// Precondition: 2 <= k <= 12.
std::vector<PairPartition> pair_partitions(int k);

// Number of crossings of a pair partition: pairs {a<b}, {c<d} cross when
// a < c < b < d.  For odd k the singleton s is closed up with an auxiliary
// partner placed to the left of every element (the pair {0, s}), so pairs
// {a, b} with a < s < b each contribute one crossing.
int crossing_number(const PairPartition& p);

// sum over all pair partitions of (-1)^crossing_number; equals 1 for every k.
long long crossing_sign_sum(int k);

// Dense skew-symmetric matrix; only the strict upper triangle is stored
// independently, so A[j][i] == -A[i][j] holds by construction.
class SkewMatrix {
public:
    explicit SkewMatrix(int n);
    int size() const { return n_; }
    double at(int i, int j) const; // 0-based
    void set(int i, int j, double v); // sets (i,j) and mirrors -(j,i); i != j

private:
    int n_;
    std::vector<double> upper_; // row-major strict upper triangle
    size_t idx(int i, int j) const;
};

// Pfaffian via memoized expansion along the first remaining row.
// Pf of the empty matrix is 1; odd n returns 0 (matching det = 0).
// Precondition: n <= 20, all entries finite.
double pfaffian(const SkewMatrix& a);

// Reference evaluation: signed sum over pair partitions,
// sum_{partitions} (-1)^crossings prod a[i][j].  Precondition: n <= 12, even.
double pfaffian_partition_sum(const SkewMatrix& a);

// Pfaffian of the principal submatrix on the given (0-based, ascending) rows.
double pfaffian_submatrix(const SkewMatrix& a, const std::vector<int>& keep);

} // namespace alcove
