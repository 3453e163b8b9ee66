#include "ratcat/parking.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ratcat/errors.hpp"

namespace ratcat {

namespace {

std::string window_string(const std::vector<Rank>& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out + "]";
}

Rank floor_div(Rank a, Rank b) {
    Rank q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Rank mod_pos(Rank a, Rank n) {
    const Rank r = a % n;
    return r < 0 ? r + n : r;
}

void require_coprime(const DyckPath& path) {
    if (path.modified()) throw UnsupportedError("parking functions need a coprime grid");
}

}  // namespace

ParkingFunction make_parking_function(DyckPath path, std::vector<Rank> window) {
    require_coprime(path);
    auto ranks = ranks_on_path(path);
    auto sorted_window = window;
    std::sort(ranks.begin(), ranks.end());
    std::sort(sorted_window.begin(), sorted_window.end());
    if (ranks != sorted_window) {
        throw DomainError("window " + window_string(window) +
                          " is not a permutation of the on-path ranks of " + path.to_string());
    }
    const Rank m = path.m();
    std::map<Rank, std::size_t> where;
    for (std::size_t i = 0; i < window.size(); ++i) where[window[i]] = i;
    for (const auto& [value, pos] : where) {
        const auto up = where.find(value + m);
        if (up != where.end() && up->second < pos) {
            throw DomainError("window " + window_string(window) + " puts " +
                              std::to_string(value + m) + " left of " + std::to_string(value));
        }
    }
    return {std::move(path), std::move(window)};
}

std::vector<ParkingFunction> enumerate_pfs(const DyckPath& path) {
    require_coprime(path);
    auto ranks = ranks_on_path(path);
    std::sort(ranks.begin(), ranks.end());
    const std::size_t n = ranks.size();
    const Rank m = path.m();

    // below[i]: index of the rank exactly m smaller (the cell directly beneath in its column).
    std::vector<std::ptrdiff_t> below(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto it = std::lower_bound(ranks.begin(), ranks.end(), ranks[i] - m);
        if (it != ranks.end() && *it == ranks[i] - m) below[i] = it - ranks.begin();
    }

    std::vector<ParkingFunction> out;
    std::vector<Rank> window;
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self) -> void {
        if (window.size() == n) {
            out.push_back({path, window});
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || (below[i] >= 0 && !used[static_cast<std::size_t>(below[i])])) continue;
            used[i] = true;
            window.push_back(ranks[i]);
            self(self);
            window.pop_back();
            used[i] = false;
        }
    };
    extend(extend);
    return out;
}

std::uint64_t count_pfs(const DyckPath& path) {
    std::map<int, int> column_sizes;
    for (Cell c : on_path_cells(path)) ++column_sizes[c.u];
    std::uint64_t total = 1;
    int placed = 0;
    // Multinomial built incrementally: C(placed+size, size) per column.
    for (const auto& [col, size] : column_sizes) {
        for (int i = 1; i <= size; ++i) {
            total = total * static_cast<std::uint64_t>(placed + i) / static_cast<std::uint64_t>(i);
        }
        placed += size;
    }
    return total;
}

DescentSet descents(const std::vector<Rank>& window) {
    DescentSet out;
    for (std::size_t i = 0; i + 1 < window.size(); ++i) {
        if (window[i] > window[i + 1]) out.push_back(static_cast<int>(i + 1));
    }
    return out;
}

std::vector<std::pair<int, int>> bounded_inversions(const ParkingFunction& pf) {
    std::vector<std::pair<int, int>> out;
    const auto& w = pf.window;
    const Rank m = pf.m();
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[j] < w[i] && w[i] < w[j] + m) {
                out.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
            }
        }
    }
    return out;
}

int bounded_inversion_count(const std::vector<Rank>& w, int m) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[j] < w[i] && w[i] < w[j] + m) ++count;
        }
    }
    return count;
}

int tdinv(const ParkingFunction& pf) {
    const auto& w = pf.window;
    const Rank m = pf.m();
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] < w[j] && w[j] < w[i] + m) ++count;
        }
    }
    return count;
}

int max_tdinv(const DyckPath& path) {
    int best = 0;
    for (const auto& pf : enumerate_pfs(path)) best = std::max(best, tdinv(pf));
    return best;
}

int dinv_pf(const ParkingFunction& pf, int path_dinv) {
    const int d = path_dinv - bounded_inversion_count(pf.window, pf.m());
    if (d < 0) {
        throw InvariantError("negative dinv for window " + window_string(pf.window) + " on " +
                             pf.path.to_string());
    }
    return d;
}

int dinv_pf(const ParkingFunction& pf) { return dinv_pf(pf, dinv_fast(pf.path).dinv()); }

int dinv_pf_via_tdinv(const ParkingFunction& pf, int path_dinv, int max_tdinv_of_path) {
    return path_dinv + tdinv(pf) - max_tdinv_of_path;
}

int dinv_pf_via_tdinv(const ParkingFunction& pf) {
    return dinv_pf_via_tdinv(pf, dinv_fast(pf.path).dinv(), max_tdinv(pf.path));
}

AffinePermutation::AffinePermutation(std::vector<Rank> window) : window_(std::move(window)) {
    const Rank n = static_cast<Rank>(window_.size());
    if (n == 0) throw DomainError("affine permutation needs a nonempty window");
    std::set<Rank> residues;
    for (Rank b : window_) {
        if (!residues.insert(mod_pos(b, n)).second) {
            throw DomainError("window " + window_string(window_) + " repeats a residue mod " +
                              std::to_string(n));
        }
    }
}

Rank AffinePermutation::operator()(Rank i) const {
    const Rank n = this->n();
    const Rank r = mod_pos(i - 1, n);  // 0-based position within the window
    const Rank shift = floor_div(i - 1, n);
    return window_[static_cast<std::size_t>(r)] + shift * n;
}

Rank AffinePermutation::position_of(Rank value) const {
    const Rank n = this->n();
    for (std::size_t j = 0; j < window_.size(); ++j) {
        if (mod_pos(value - window_[j], n) == 0) {
            return static_cast<Rank>(j + 1) + (value - window_[j]);
        }
    }
    throw InvariantError("affine window misses a residue");
}

bool AffinePermutation::is_bounded(int m) const {
    // Shift invariance reduces the check to the window entries.
    for (std::size_t j = 0; j < window_.size(); ++j) {
        if (position_of(window_[j] + m) <= static_cast<Rank>(j + 1)) return false;
    }
    return true;
}

Rank AffinePermutation::window_sum() const {
    return std::accumulate(window_.begin(), window_.end(), Rank{0});
}

AffinePermutation to_affine(const ParkingFunction& pf, int path_area) {
    const Rank kappa = pf.n() + 1 - path_area;
    std::vector<Rank> shifted = pf.window;
    for (auto& w : shifted) w += kappa;
    AffinePermutation ap(std::move(shifted));
    if (!ap.is_bounded(pf.m())) {
        throw InvariantError("affine image of " + window_string(pf.window) + " is not " +
                             std::to_string(pf.m()) + "-bounded");
    }
    return ap;
}

AffinePermutation to_affine(const ParkingFunction& pf) {
    return to_affine(pf, dinv_fast(pf.path).area());
}

int area_from_affine(const AffinePermutation& ap) {
    return static_cast<int>(1 - *std::min_element(ap.window().begin(), ap.window().end()));
}

std::int64_t inv_affine(const AffinePermutation& ap, int m) {
    // For positions i = r + n*s, count s with s(j) < b_r + n*s < s(j)+m and r + n*s < j.
    const Rank n = ap.n();
    const auto& b = ap.window();
    std::int64_t total = 0;
    for (Rank j = 1; j <= n; ++j) {
        const Rank bj = b[static_cast<std::size_t>(j - 1)];
        for (Rank r = 1; r <= n; ++r) {
            const Rank br = b[static_cast<std::size_t>(r - 1)];
            const Rank s_lo = floor_div(bj - br, n) + 1;
            const Rank s_hi = -floor_div(-(bj + m - br), n) - 1;  // ceil(...) - 1
            const Rank s_pos = floor_div(j - r - 1, n);
            const Rank hi = std::min(s_hi, s_pos);
            if (hi >= s_lo) total += hi - s_lo + 1;
        }
    }
    return total;
}

AffinePermutation AffineFactorization::recombine(const std::vector<int>& perm) const {
    if (perm.size() != sorted_window.size()) throw DomainError("pattern length mismatch");
    std::vector<Rank> window;
    window.reserve(perm.size());
    for (int p : perm) {
        if (p < 1 || p > static_cast<int>(sorted_window.size())) {
            throw DomainError("pattern entry out of range");
        }
        window.push_back(sorted_window[static_cast<std::size_t>(p - 1)]);
    }
    return AffinePermutation(std::move(window));
}

AffineFactorization factor_affine(const AffinePermutation& ap) {
    AffineFactorization f;
    f.sorted_window = ap.window();
    std::sort(f.sorted_window.begin(), f.sorted_window.end());
    for (Rank w : ap.window()) {
        const auto it = std::lower_bound(f.sorted_window.begin(), f.sorted_window.end(), w);
        f.pattern.push_back(static_cast<int>(it - f.sorted_window.begin()) + 1);
    }
    return f;
}

int permutation_inversions(const std::vector<int>& perm) {
    int count = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++count;
        }
    }
    return count;
}

}  // namespace ratcat
