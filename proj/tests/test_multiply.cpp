#include "seaweed/multiply.hpp"

#include "seaweed/lcs.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

using namespace seaweed;

namespace {

std::string random_string(std::mt19937_64& rng, int len, int sigma) {
    std::string s(len, 'a');
    for (char& c : s) c = static_cast<char>('a' + rng() % sigma);
    return s;
}

PermutationNonzeros random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return PermutationNonzeros{std::move(v)};
}

// All permutations of size n, as column vectors.
std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Factor embedded as a finite permutation over rows [lo, hi) and columns
// [lo + shift, hi + shift): identity outside the window in rank terms.
PermutationNonzeros embed_factor(const Factor& f, int lo, int hi) {
    const int w = f.core.count();
    REQUIRE(f.window_start >= lo);
    REQUIRE(f.window_start + w <= hi);
    std::vector<int> fwd(hi - lo);
    std::iota(fwd.begin(), fwd.end(), 0);
    for (int r = 0; r < w; ++r) fwd[f.window_start - lo + r] = f.window_start - lo + f.core.col(r);
    return PermutationNonzeros{std::move(fwd)};
}

}  // namespace

TEST_CASE("multiply_core identity and transposition") {
    std::mt19937_64 rng(3);
    for (int n : {1, 2, 3, 5, 9}) {
        PermutationNonzeros p = random_perm(rng, n);
        CHECK(multiply_core(PermutationNonzeros::identity(n), p) == p);
        CHECK(multiply_core(p, PermutationNonzeros::identity(n)) == p);
    }
    PermutationNonzeros x{{1, 0}};
    CHECK(multiply_core(x, x) == x);
    CHECK_THROWS_AS(multiply_core(x, PermutationNonzeros::identity(3)), std::invalid_argument);
}

TEST_CASE("multiply_core equals the oracle exhaustively for tiny sizes") {
    for (int n = 1; n <= 4; ++n) {
        auto perms = all_perms(n);
        for (const auto& u : perms)
            for (const auto& w : perms) {
                PermutationNonzeros a{u}, b{w};
                REQUIRE(multiply_core(a, b) == minplus_oracle(a, b));
            }
    }
}

TEST_CASE("multiply_core equals the oracle on random sizes") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 120; ++it) {
        int n = 1 + static_cast<int>(rng() % 80);
        PermutationNonzeros a = random_perm(rng, n);
        PermutationNonzeros b = random_perm(rng, n);
        REQUIRE(multiply_core(a, b) == minplus_oracle(a, b));
    }
}

TEST_CASE("min-plus product is associative") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 30; ++it) {
        int n = 1 + static_cast<int>(rng() % 24);
        PermutationNonzeros p = random_perm(rng, n), q = random_perm(rng, n), r = random_perm(rng, n);
        CHECK(minplus_oracle(minplus_oracle(p, q), r) == minplus_oracle(p, minplus_oracle(q, r)));
        CHECK(multiply_core(multiply_core(p, q), r) == multiply_core(p, multiply_core(q, r)));
    }
}

TEST_CASE("compose identity laws") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 20; ++it) {
        int n = static_cast<int>(rng() % 12);
        SeaweedMatrix s = build(random_string(rng, static_cast<int>(rng() % 10), 2),
                                random_string(rng, n, 2));
        CHECK(compose(empty_matrix(s.width()), s) == s);
        CHECK(compose(s, empty_matrix(s.width())) == s);
    }
    CHECK_THROWS_AS(compose(empty_matrix(2), empty_matrix(3)), std::invalid_argument);
}

TEST_CASE("compose matches the direct build") {
    CHECK(compose(build("a", "abc"), build("b", "abc")) == build("ab", "abc"));
    std::mt19937_64 rng(37);
    for (int it = 0; it < 60; ++it) {
        std::string a1 = random_string(rng, static_cast<int>(rng() % 10), 2);
        std::string a2 = random_string(rng, static_cast<int>(rng() % 10), 2);
        std::string b = random_string(rng, static_cast<int>(rng() % 14), 2);
        CHECK(compose(build(a1, b), build(a2, b)) == build(a1 + a2, b));
    }
}

TEST_CASE("compose is associative") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 20; ++it) {
        std::string b = random_string(rng, static_cast<int>(rng() % 10), 3);
        SeaweedMatrix sa = build(random_string(rng, 1 + static_cast<int>(rng() % 5), 3), b);
        SeaweedMatrix sb = build(random_string(rng, 1 + static_cast<int>(rng() % 5), 3), b);
        SeaweedMatrix sc = build(random_string(rng, 1 + static_cast<int>(rng() % 5), 3), b);
        CHECK(compose(compose(sa, sb), sc) == compose(sa, compose(sb, sc)));
    }
}

TEST_CASE("decompose base cases and leaf counts") {
    // width < depth: one factor carrying the whole core
    SeaweedMatrix b1 = build("abcd", "ab");
    FactorChain c1 = decompose(b1);
    CHECK(c1.factors.size() == 1);
    CHECK(c1.total_shift == 0);
    CHECK(c1.factors[0].core == b1.core());
    CHECK(c1.factors[0].window_start == -b1.depth());

    // depth 2, width 8: two split levels, four leaves
    SeaweedMatrix b2 = build("ab", "abababab");
    FactorChain c2 = decompose(b2);
    CHECK(c2.factors.size() == 4);
    CHECK(c2.total_shift == 3 * 2);

    CHECK_THROWS_AS(decompose(empty_matrix(3)), std::invalid_argument);
}

TEST_CASE("decompose fold-back identity through the oracle") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 25; ++it) {
        int depth = 1 + static_cast<int>(rng() % 5);
        int width = static_cast<int>(rng() % 24);
        SeaweedMatrix b = build(random_string(rng, depth, 2), random_string(rng, width, 2));
        FactorChain chain = decompose(b);
        const int q = b.depth();
        const int lo = -q - 1;
        const int hi = b.width() + q + 1;

        PermutationNonzeros fold = embed_factor(chain.factors[0], lo, hi);
        for (std::size_t i = 1; i < chain.factors.size(); ++i)
            fold = minplus_oracle(fold, embed_factor(chain.factors[i], lo + static_cast<int>(i) * q,
                                                     hi + static_cast<int>(i) * q));

        // Expected: b's infinite extension, columns shifted by total_shift.
        // The fold's columns live on the line shifted by factors.size()*q.
        for (int r = 0; r < hi - lo; ++r) {
            int row = lo + r;  // global row-line position
            int col;           // b's extension: core inside, row+depth outside
            if (row >= -q && row < b.width()) col = b.fwd()[row + q];
            else col = row + q;
            int expect_rank =
                (col + chain.total_shift) - (lo + static_cast<int>(chain.factors.size()) * q);
            REQUIRE(fold.col(r) == expect_rank);
        }
    }
}

TEST_CASE("multiply_windowed with an identity core applies only the shift") {
    WindowedProduct c;
    c.fwd = {2, 0, 1, 3};
    c.inv = {1, 2, 0, 3};
    Factor f;
    f.window_start = 1;
    f.shift = 1;
    f.core = PermutationNonzeros::identity(2);
    multiply_windowed(c, f);
    CHECK(c.fwd == std::vector<int>{2, 0, 1, 3});
    CHECK(c.shift_applied == 1);
}

TEST_CASE("multiply_windowed window bounds are checked") {
    WindowedProduct c;
    c.fwd = {0, 1};
    c.inv = {0, 1};
    Factor f;
    f.window_start = 1;
    f.shift = 1;
    f.core = PermutationNonzeros::identity(2);
    CHECK_THROWS_AS(multiply_windowed(c, f), std::invalid_argument);
}

TEST_CASE("single factor chain application equals compose") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 30; ++it) {
        std::string b = random_string(rng, static_cast<int>(rng() % 10), 2);
        SeaweedMatrix sb = build(random_string(rng, 3 + static_cast<int>(rng() % 4), 2), b);
        SeaweedMatrix sa = build(random_string(rng, static_cast<int>(rng() % 8), 2), b);
        if (sb.width() >= sb.depth()) continue;  // keep to the single-factor regime
        CHECK(compose_balanced(sa, sb) == compose(sa, sb));
    }
}

TEST_CASE("compose_balanced equals compose") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 80; ++it) {
        std::string b = random_string(rng, static_cast<int>(rng() % 33), 3);
        std::string a1 = random_string(rng, static_cast<int>(rng() % 17), 3);
        std::string a2 = random_string(rng, static_cast<int>(rng() % 17), 3);
        SeaweedMatrix sa = build(a1, b), sb = build(a2, b);
        REQUIRE(compose_balanced(sa, sb) == compose(sa, sb));
    }
}

TEST_CASE("compose_balanced shallow and empty operands") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 25; ++it) {
        std::string b = random_string(rng, static_cast<int>(rng() % 20), 2);
        std::string a = random_string(rng, 1 + static_cast<int>(rng() % 10), 2);
        char extra = static_cast<char>('a' + rng() % 2);
        // prepending one character routes through the reversal symmetry
        CHECK(compose_balanced(single_row(extra, b), build(a, b)) ==
              build(std::string(1, extra) + a, b));
        CHECK(compose_balanced(build(a, b), empty_matrix(static_cast<int>(b.size()))) == build(a, b));
        CHECK(compose_balanced(empty_matrix(static_cast<int>(b.size())), build(a, b)) == build(a, b));
    }
}

TEST_CASE("reversal symmetry of built matrices") {
    std::mt19937_64 rng(73);
    for (int it = 0; it < 25; ++it) {
        std::string a = random_string(rng, static_cast<int>(rng() % 10), 3);
        std::string b = random_string(rng, static_cast<int>(rng() % 10), 3);
        std::string ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
        CHECK(build(a, b).reversed() == build(ra, rb));
    }
}
