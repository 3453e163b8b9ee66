#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ratcat/dyck.hpp"

namespace ratcat {

/// Sorted subset of {1..n-1}.
using DescentSet = std::vector<int>;

/// Rational parking function in window notation: w_i is the rank of the
/// on-path cell carrying label i.
struct ParkingFunction {
    DyckPath path;
    std::vector<Rank> window;

    int n() const { return path.n(); }
    int m() const { return path.m(); }
    bool operator==(const ParkingFunction&) const = default;
};

/// Validates that `window` is a permutation of the on-path ranks with k left of
/// k+m whenever both occur. DomainError otherwise.
ParkingFunction make_parking_function(DyckPath path, std::vector<Rank> window);

/// All windows on the path, ascending lexicographically. Coprime grids only.
std::vector<ParkingFunction> enumerate_pfs(const DyckPath& path);

/// n! over the product of factorials of on-path column multiplicities.
std::uint64_t count_pfs(const DyckPath& path);

/// Positions i with w_i > w_{i+1}, 1-based.
DescentSet descents(const std::vector<Rank>& window);
inline DescentSet ides(const ParkingFunction& pf) { return descents(pf.window); }

/// Pairs (i,j), 1-based, with i < j and w_j < w_i < w_j + m.
std::vector<std::pair<int, int>> bounded_inversions(const ParkingFunction& pf);
int bounded_inversion_count(const std::vector<Rank>& window, int m);

/// Pairs (i,j) with i < j and w_i < w_j < w_i + m.
int tdinv(const ParkingFunction& pf);
/// Largest tdinv over every parking function on the path.
int max_tdinv(const DyckPath& path);

/// dinv(path) - inv(pf). InvariantError if negative.
int dinv_pf(const ParkingFunction& pf);
int dinv_pf(const ParkingFunction& pf, int path_dinv);

/// dinv(path) + tdinv(pf) - maxtdinv(path).
int dinv_pf_via_tdinv(const ParkingFunction& pf);
int dinv_pf_via_tdinv(const ParkingFunction& pf, int path_dinv, int max_tdinv_of_path);

/// Bijection of Z with s(i+n) = s(i)+n, stored by its base window s(1..n).
class AffinePermutation {
public:
    /// DomainError unless the entries are pairwise distinct mod n.
    explicit AffinePermutation(std::vector<Rank> window);

    int n() const { return static_cast<int>(window_.size()); }
    const std::vector<Rank>& window() const { return window_; }

    Rank operator()(Rank i) const;
    /// The unique i with s(i) = value.
    Rank position_of(Rank value) const;
    /// Value i always sits left of value i+m.
    bool is_bounded(int m) const;
    Rank window_sum() const;

    bool operator==(const AffinePermutation&) const = default;

private:
    std::vector<Rank> window_;
};

/// Shifts every window entry by n+1-area. InvariantError if the result is not m-bounded.
AffinePermutation to_affine(const ParkingFunction& pf);
AffinePermutation to_affine(const ParkingFunction& pf, int path_area);

/// 1 minus the smallest window entry.
int area_from_affine(const AffinePermutation& ap);

/// Pairs (i,j) with i < j, 1 <= j <= n and s(j) < s(i) < s(j)+m, i ranging over Z.
std::int64_t inv_affine(const AffinePermutation& ap, int m);

/// Split of an affine permutation into its sorted window and the pattern
/// that rearranges it: window[j] = sorted_window[pattern[j]-1].
struct AffineFactorization {
    std::vector<Rank> sorted_window;
    std::vector<int> pattern;

    AffinePermutation recombine(const std::vector<int>& perm) const;
    AffinePermutation recombine() const { return recombine(pattern); }
};

AffineFactorization factor_affine(const AffinePermutation& ap);

/// Inversion count of a finite permutation of 1..n.
int permutation_inversions(const std::vector<int>& perm);

}  // namespace ratcat
