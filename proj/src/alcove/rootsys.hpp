#pragma once

// Root-system data for the reflection groups whose fundamental alcoves we
// exit from: the infinite families A_{k-1}, B_k, C_k, D_k (affine versions)
// and G2.  Coordinates are ambient: R^k for B/C/D, the sum-zero hyperplane of
// R^k for type A and of R^3 for G2.  The alcove is always the set
//   { x : 0 < <x, a> < 1 for every positive root a },
// equivalently cut out by the simple roots (lower walls) and the highest
// root (upper wall).

#include "alcove/vecutil.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace alcove {

enum class Family { A, B, C, D, G2 };

Family parse_family(const std::string& name); // "A","B","C","D","G2" ("F4" -> unsupported)
std::string family_name(Family f);

// An affine wall <alpha, x> = level; the reflection in it is
// x -> x - (<alpha,x> - level) * 2 alpha / <alpha,alpha>.
struct AffineRoot {
    Vec alpha;
    double level = 0.0;
};

struct RootDatum {
    Family family;
    int k = 0;       // family parameter: number of coordinates (A: walks; B/C/D: rank)
    int ambient = 0; // dimension of the ambient coordinate space
    int rank = 0;    // dimension of the span of the roots

    std::vector<Vec> positive; // deterministic order, see make_datum
    std::vector<Vec> simple;
    Vec highest;

    // Families whose coordinates live in the sum-zero hyperplane.
    bool sum_zero_plane() const { return family == Family::A || family == Family::G2; }
};

// Construct the datum.  A: k >= 2 (ambient R^k, roots e_i - e_j);
// B/C: k >= 2, D: k >= 3 (ambient R^k; the rank-2 D system is reducible and
// its alcove is not a simplex); G2: k must be 2 (ambient R^3).
// Positive-root order: A: (i<j) lexicographic differences; B/C: differences,
// then sums, then the k short/long singles; D: differences then sums;
// G2: short roots then long roots, each lexicographic by the index pattern.
RootDatum make_datum(Family f, int k);

// <x, alpha> for every positive root, in the positive-root order.
std::vector<double> root_pairings(const RootDatum& d, const Vec& x);

// Coroot 2 a / <a,a>.
Vec coroot(const Vec& alpha);

// Strict alcove membership, full characterization (every positive root).
bool in_alcove_all_roots(const RootDatum& d, const Vec& x);

// Strict alcove membership via simple roots plus the highest root only.
// Equivalent to in_alcove_all_roots; cheap enough for Monte Carlo loops.
bool in_alcove(const RootDatum& d, const Vec& x);

// Strict dominant-chamber membership (<x, a> > 0 for all positive roots).
bool in_chamber(const RootDatum& d, const Vec& x);

// Reflection in the affine wall.
Vec reflect_affine(const AffineRoot& wall, const Vec& x);

// Walls of the fundamental alcove: each simple root at level 0, the highest
// root at level 1.
std::vector<AffineRoot> alcove_walls(const RootDatum& d);

// Vertices of the (simplex) alcove in ambient coordinates.  Vertex j is the
// intersection of all walls except wall j, in the order of alcove_walls:
// index 0..rank-1 drop one simple wall, index rank drops the affine wall
// (that vertex is the origin).
std::vector<Vec> alcove_vertices(const RootDatum& d);

// Barycenter of the alcove vertices; strictly interior.
Vec alcove_barycenter(const RootDatum& d);

// Membership of v in the translation lattice of the affine group:
// A: integer coordinates summing to zero; C: integer coordinates;
// B/D: integer coordinates with even sum; G2: sum-zero vectors in R^3 with
// 3*v_i integral (equivalently here: sum-zero integer vectors scaled by 1/3
// closure; the paper-level definition is used verbatim).
bool translation_lattice_contains(const RootDatum& d, const Vec& v, double tol = 1e-9);

// Lattice shell sums.  For a pairwise-orthogonal set A = {b_1..b_p} of roots,
// the lattice E_A = { v in span A : <v, b_i> integral for all i } is
// coordinatized exactly by the integer pairing vector m_i = <v, b_i>; the
// shell |v|_A = max_i |m_i| = s is finite and the signed count sums
// (-1)^{#(m_i > 0)} over it.  Exact integer arithmetic; the result is 0 for
// every s >= 1.  Preconditions: roots pairwise orthogonal, |A| <= 6,
// shell >= 1.
long long lattice_shell_signed_count(const std::vector<Vec>& orthogonal_roots, int shell);

// Random interior point sampling support: uniform barycentric weights over
// the alcove simplex (Dirichlet(1,..,1)); deterministic given the rng state.
Vec sample_alcove_interior(const RootDatum& d, const std::vector<Vec>& vertices, uint64_t& rng_state);

// Random point on the facet lying in wall `wall`: barycentric weights over
// every vertex except vertex `wall` (which is the only one off that wall).
Vec sample_alcove_facet(const RootDatum& d, const std::vector<Vec>& vertices, int wall, uint64_t& rng_state);

// xorshift-style helper used by the samplers (SplitMix64 step).
uint64_t splitmix64(uint64_t& state);
double uniform01(uint64_t& state);

} // namespace alcove
