#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ratcat/dyck.hpp"
#include "ratcat/errors.hpp"
#include "ratcat/parking.hpp"

using namespace ratcat;

namespace {

std::vector<Rank> sorted(std::vector<Rank> xs) {
    std::sort(xs.begin(), xs.end());
    return xs;
}

std::vector<std::pair<int, int>> pairs(const std::vector<Cell>& cells) {
    std::vector<std::pair<int, int>> out;
    for (const auto& c : cells) out.emplace_back(c.u, c.v);
    std::sort(out.begin(), out.end());
    return out;
}

template <class F>
void for_coprime(int max_sum, F f) {
    for (int m = 1; m < max_sum; ++m) {
        for (int n = 1; m + n <= max_sum; ++n) {
            if (oracle::gcd(m, n) == 1) f(m, n);
        }
    }
}

}  // namespace

TEST_CASE("construction and validation") {
    CHECK_NOTHROW(DyckPath::from_counts({4, 7}, {0, 0, 0, 0, 0, 2, 2}));
    CHECK(DyckPath::from_counts({5, 3}, {0, 1, 3}) == d_path(5, 3, 1));
    CHECK_THROWS_AS(DyckPath::from_counts({5, 3}, {0, 2, 1}), InvalidPathError);
    CHECK_THROWS_AS(DyckPath::from_counts({5, 3}, {1, 1, 1}), InvalidPathError);
    CHECK_THROWS_AS(DyckPath::from_counts({5, 3}, {0, 0, 4}), InvalidPathError);
    CHECK_THROWS_AS(DyckPath::from_counts({5, 3}, {0, 2, 2}), InvalidPathError);
    CHECK_THROWS_AS(DyckPath::from_counts({5, 3}, {0, 1}), InvalidPathError);
    CHECK_THROWS_AS(DyckPath::from_counts({5, 3}, {0, -1, 0}), InvalidPathError);
    CHECK_THROWS_AS(DyckPath::from_counts({4, 6}, {0, 0, 0, 0, 0, 0}), DomainError);
    CHECK_NOTHROW(DyckPath::from_counts({6, 3}, {0, 1, 4}));
    CHECK_THROWS_AS(DyckPath::from_counts({6, 3}, {0, 2, 2}), InvalidPathError);
    CHECK_THROWS_AS(DyckPath::from_counts({6, 3}, {0, 1, 5}), InvalidPathError);
}

TEST_CASE("step words and literals") {
    const auto p = DyckPath::from_counts({5, 3}, {0, 1, 2});
    CHECK(p.to_steps() == "NENENEEE");
    CHECK(DyckPath::from_steps({5, 3}, "NENENEEE") == p);
    CHECK(DyckPath::parse({5, 3}, "0,1,2") == p);
    CHECK(DyckPath::parse({5, 3}, "NENENEEE") == p);
    CHECK(p.to_string() == "0,1,2");
    CHECK_THROWS_AS(DyckPath::from_steps({5, 3}, "NNENEEE"), InvalidPathError);
    CHECK_THROWS_AS(DyckPath::from_steps({5, 3}, "ENNNEEEE"), InvalidPathError);
    CHECK_THROWS_AS(DyckPath::parse({5, 3}, "0,1,x"), InvalidPathError);
    CHECK_THROWS_AS(DyckPath::parse({5, 3}, ""), InvalidPathError);
    for (const auto& q : enumerate_paths({7, 4})) {
        CHECK(DyckPath::from_steps({7, 4}, q.to_steps()) == q);
        CHECK(DyckPath::parse({7, 4}, q.to_string()) == q);
    }
}

TEST_CASE("enumeration agrees with the lattice-word oracle") {
    for_coprime(15, [](int m, int n) {
        const auto lib = enumerate_paths({m, n});
        const auto ref = oracle::paths(m, n);
        REQUIRE(lib.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(lib[i].counts() == ref[i]);
        CHECK(ref.size() == oracle::binom(m + n, n) / static_cast<std::uint64_t>(m + n));
        CHECK(count_paths({m, n}) == ref.size());
    });
    for (int k = 1; k <= 6; ++k) {
        const auto lib = enumerate_paths({3 * k, 3});
        const auto ref = oracle::paths(3 * k, 3);
        REQUIRE(lib.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(lib[i].counts() == ref[i]);
        CHECK(count_paths({3 * k, 3}) == ref.size());
    }
    CHECK(enumerate_paths({3, 2}).size() == 2);
    CHECK(enumerate_paths({5, 3}).size() == 7);
    CHECK(enumerate_paths({1, 9}).size() == 1);
    CHECK(count_paths({40, 41}) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("on-path ranks") {
    const auto p = DyckPath::from_counts({4, 7}, {0, 0, 0, 0, 0, 2, 2});
    CHECK(sorted(ranks_on_path(p)) == std::vector<Rank>{-7, -3, -1, 1, 3, 5, 9});
    CHECK(ranks_on_path(d_path(5, 2, 1)) == std::vector<Rank>{-3, -1, 1});
    CHECK(sorted(ranks_on_path(d_path(5, 2, 0))) == std::vector<Rank>{-3, 1, 2});
    CHECK(on_path_cells(d_path(5, 2, 1)) == std::vector<Cell>{{1, 1}, {2, 2}, {3, 3}});
    for_coprime(12, [](int m, int n) {
        for (const auto& q : enumerate_paths({m, n})) CHECK(ranks_on_path(q) == oracle::on_path(m, n, q.counts()));
    });
}

TEST_CASE("arm and leg") {
    const auto p = d_path(5, 2, 1);
    CHECK(arm(p, {1, 3}) == 1);
    CHECK(leg(p, {1, 3}) == 1);
    CHECK(arm(p, {2, 3}) == 0);
    CHECK(leg(p, {2, 3}) == 0);
    CHECK_THROWS_AS((void)arm(p, {3, 3}), DomainError);
    CHECK_THROWS_AS((void)leg(p, {1, 1}), DomainError);
    const auto single = DyckPath::from_counts({5, 3}, {0, 0, 1});
    CHECK(arm(single, {1, 3}) == 0);
    CHECK(leg(single, {1, 3}) == 0);
}

TEST_CASE("(5,7) fast dinv witness") {
    const auto p = DyckPath::from_counts({5, 7}, {0, 0, 1, 1, 1, 1, 2});
    const auto w = fast_dinv_witness(p, {1, 7});
    CHECK(w.east_end == Cell{2, 7});
    CHECK(w.east_out == Cell{3, 7});
    CHECK(w.south_end == Cell{1, 3});
    CHECK(w.south_out == Cell{1, 2});
    CHECK(rank(p.params(), w.east_end) == 16);
    CHECK(rank(p.params(), w.south_out) == -2);
    CHECK(rank(p.params(), w.south_end) == 3);
    CHECK(rank(p.params(), w.east_out) == 9);
    CHECK_FALSE(w.in_dinv);
    const auto slow = dinv_slow(p);
    CHECK(std::find(slow.dinv_set.begin(), slow.dinv_set.end(), Cell{1, 7}) == slow.dinv_set.end());
    CHECK(std::find(slow.skips_set.begin(), slow.skips_set.end(), Cell{1, 7}) != slow.skips_set.end());
}

TEST_CASE("fast and slow dinv agree with the definition oracle") {
    for_coprime(14, [](int m, int n) {
        const int half = (m - 1) * (n - 1) / 2;
        for (const auto& p : enumerate_paths({m, n})) {
            const auto slow = dinv_slow(p);
            const auto fast = dinv_fast(p);
            CHECK(pairs(fast.dinv_set) == pairs(slow.dinv_set));
            CHECK(pairs(fast.skips_set) == pairs(slow.skips_set));
            CHECK(pairs(fast.area_set) == pairs(slow.area_set));
            CHECK(pairs(slow.dinv_set) == oracle::dinv_cells(m, n, p.counts()));
            CHECK(slow.area() == oracle::area(m, n, p.counts()));
            CHECK(slow.area() + slow.dinv() + slow.skips() == half);
            CHECK(slow.dinv() + slow.skips() == oracle::above(p.counts()));
        }
    });
}

TEST_CASE("statistics of small examples") {
    const auto s = dinv_slow(d_path(5, 2, 1));
    CHECK(s.dinv() == 3);
    CHECK(s.area() == 1);
    for (int m : {2, 4, 5, 7, 8}) {
        const auto z = dinv_slow(d_path(m, 0, 0));
        CHECK(z.dinv() == 0);
        CHECK(z.skips() == 0);
        CHECK(z.area() == m - 1);
    }
    CHECK_THROWS_AS(dinv_slow(DyckPath::from_counts({6, 3}, {0, 1, 4})), DomainError);
}

TEST_CASE("modified statistics partition the positive cells") {
    for (int k = 1; k <= 6; ++k) {
        const int m = 3 * k;
        const int positives = RankDiagram({m, 3}).positive_count();
        for (const auto& p : enumerate_paths({m, 3})) {
            const auto s = dinv_fast(p);
            CHECK(s.area() == oracle::area(m, 3, p.counts()));
            CHECK(s.dinv() == oracle::dinv_modified(m, 3, p.counts()));
            CHECK(s.area() + s.dinv() + s.skips() == positives);
        }
    }
    const auto ex = dinv_fast(DyckPath::from_counts({6, 3}, {0, 1, 4}));
    CHECK(ex.dinv() == 5);
    CHECK(ex.area() == 0);
}

TEST_CASE("catalan polynomial and transpose symmetry") {
    for_coprime(14, [](int m, int n) {
        const QTPoly c = catalan_brute({m, n});
        CHECK(c == oracle::catalan(m, n));
        CHECK(c == catalan_brute({n, m}));
    });
    CHECK(catalan_brute({1, 2}) == QTPoly::constant(1));
}

TEST_CASE("type classification") {
    CHECK(classify(d_path(5, 1, 1)) == PathType{PathKind::T1, 1, 1});
    CHECK(classify(d_path(5, 2, 0)) == PathType{PathKind::T2b, 2, 0});
    CHECK(classify(d_path(5, 0, 0)) == PathType{PathKind::T0, 0, 0});
    CHECK(classify(d_path(5, 1, 0)).kind == PathKind::T2a);
    CHECK(classify(d_path(5, 2, 1)).kind == PathKind::T3b);
    CHECK(classify(d_path(5, 3, 1)).kind == PathKind::T3b);
    CHECK(classify(d_path(7, 2, 1)).kind == PathKind::T3a);
    CHECK_THROWS_AS(classify(d_path(6, 0, 0)), DomainError);
    CHECK_THROWS_AS(classify(DyckPath::from_counts({3, 4}, {0, 0, 0, 0})), DomainError);
    for (auto kind : kAllPathKinds) CHECK(path_kind_from_string(to_string(kind)) == kind);
    CHECK(to_string(PathKind::T2b) == "2b");
    CHECK_THROWS_AS(path_kind_from_string("4"), DomainError);

    for (int m = 1; m <= 20; ++m) {
        if (m % 3 == 0) continue;
        for (const auto& p : enumerate_paths({m, 3})) {
            const auto ty = classify(p);
            const int k = p.above_in_row(3), l = p.above_in_row(2);
            CHECK(ty.k == k);
            CHECK(ty.l == l);
            int matches = 0;
            matches += (k == 0 && l == 0) ? 1 : 0;
            matches += (l > 0 && l == k && 3 * k < m) ? 1 : 0;
            matches += (l == 0 && k > 0 && 3 * k < m) ? 1 : 0;
            matches += (l == 0 && 3 * k > m) ? 1 : 0;
            matches += (l > 0 && l < k && 3 * k < m) ? 1 : 0;
            matches += (l > 0 && 3 * k > m) ? 1 : 0;
            CHECK(matches == 1);
        }
    }
}

TEST_CASE("type 1 paths have no top-row dinv cells") {
    for (int m = 4; m <= 20; ++m) {
        if (m % 3 == 0) continue;
        for (const auto& p : enumerate_paths({m, 3})) {
            if (classify(p).kind != PathKind::T1) continue;
            for (const auto& c : dinv_fast(p).dinv_set) CHECK(c.v != 3);
        }
    }
}

TEST_CASE("lift from modified (3k,3) to (3k+1,3)") {
    CHECK(lift_3k_to_3k1(DyckPath::from_counts({9, 3}, {0, 2, 3})) == DyckPath::from_counts({10, 3}, {0, 2, 3}));
    CHECK(lift_3k_to_3k1(DyckPath::from_counts({6, 3}, {0, 0, 0})) == DyckPath::from_counts({7, 3}, {0, 0, 0}));
    CHECK_THROWS_AS(lift_3k_to_3k1(d_path(5, 0, 0)), DomainError);
    for (int k = 1; k <= 6; ++k) {
        const int m = 3 * k;
        std::set<std::vector<int>> images;
        for (const auto& p : enumerate_paths({m, 3})) {
            const auto img = lift_3k_to_3k1(p);
            CHECK(img.m() == m + 1);
            CHECK_FALSE(img.is_above({k, 2}));
            CHECK(rank(img.params(), {k, 2}) == 1);
            const auto a = dinv_fast(p), b = dinv_fast(img);
            CHECK(b.dinv() == a.dinv());
            CHECK(b.area() == a.area() + 1);
            images.insert(img.counts());
        }
        std::set<std::vector<int>> target;
        for (const auto& a : oracle::paths(m + 1, 3)) {
            if (a[1] < k) target.insert(a);
        }
        CHECK(images == target);
    }
}

TEST_CASE("distinct-column drop") {
    const auto p = d_path(5, 2, 1);
    CHECK(has_distinct_columns(p));
    const auto q = drop_distinct_column_path(p);
    CHECK(q == DyckPath::from_counts({2, 3}, {0, 0, 0}));
    CHECK(drop_distinct_column_path(DyckPath::from_counts({3, 2}, {0, 1})) == DyckPath::from_counts({1, 2}, {0, 0}));
    CHECK_FALSE(has_distinct_columns(d_path(5, 0, 0)));
    CHECK_THROWS_AS(drop_distinct_column_path(d_path(5, 0, 0)), DomainError);
    CHECK_THROWS_AS(drop_distinct_column_path(DyckPath::from_counts({3, 5}, {0, 0, 1, 1, 2})), DomainError);

    for_coprime(14, [](int m, int n) {
        if (m <= n) return;
        std::set<std::vector<int>> images;
        for (const auto& path : enumerate_paths({m, n})) {
            if (!has_distinct_columns(path)) continue;
            const auto img = drop_distinct_column_path(path);
            CHECK(img.m() == m - n);
            CHECK(ranks_on_path(img) == ranks_on_path(path));
            const auto before = dinv_slow(path), after = dinv_slow(img);
            CHECK(after.area() == before.area());
            std::vector<Rank> w = ranks_on_path(path);
            std::sort(w.rbegin(), w.rend());
            CHECK(after.dinv() == dinv_pf(make_parking_function(path, w)));
            images.insert(img.counts());
        }
        CHECK(images.size() == oracle::paths(m - n, n).size());
    });
}

TEST_CASE("shrink D_m(k,l) to D_{m-2}(k-1,l-1)") {
    const auto a = shrink_m3(d_path(5, 2, 1));
    CHECK(a == DyckPath::from_counts({3, 3}, {0, 0, 1}));
    CHECK(a.modified());
    CHECK(dinv_fast(a).dinv() == 1);
    const auto b = shrink_m3(d_path(5, 1, 1));
    CHECK(b == DyckPath::from_counts({3, 3}, {0, 0, 0}));
    CHECK(dinv_fast(b).dinv() == 0);
    CHECK(dinv_fast(b).area() == 2);
    CHECK(shrink_m3(d_path(7, 2, 2)) == d_path(5, 1, 1));
    CHECK(dinv_fast(d_path(5, 1, 1)).area() == dinv_fast(d_path(7, 2, 2)).area());
    CHECK_THROWS_AS(shrink_m3(d_path(5, 2, 0)), DomainError);

    // Same arm and leg, different slope: the type 3b drop is exact only in aggregate.
    const auto c = d_path(7, 4, 1);
    CHECK(shrink_m3(c) == d_path(5, 3, 0));
    CHECK(oracle::dinv(7, 3, c.counts()) == 5);
    CHECK(oracle::dinv(5, 3, {0, 0, 3}) == 2);

    for (int m = 4; m <= 20; ++m) {
        if (m % 3 == 0) continue;
        std::set<std::vector<int>> images;
        QTPoly shifted, shrunk;
        for (const auto& p : enumerate_paths({m, 3})) {
            if (p.above_in_row(2) == 0) continue;
            const auto img = shrink_m3(p);
            CHECK(img.counts() == std::vector<int>{0, p.above_in_row(2) - 1, p.above_in_row(3) - 1});
            images.insert(img.counts());
            const auto s = dinv_fast(p), t = dinv_fast(img);
            CHECK(t.area() == s.area());
            if (classify(p).kind == PathKind::T3b) {
                shifted.add_term(s.dinv() - 2, s.area(), 1);
                shrunk.add_term(t.dinv(), t.area(), 1);
                if (m % 3 != 1) CHECK(t.dinv() == s.dinv() - 2);
            } else {
                CHECK(t.dinv() == s.dinv() - 1);
            }
        }
        CHECK(shifted == shrunk);
        CHECK(images.size() == oracle::paths(m - 2, 3).size());
    }
}
