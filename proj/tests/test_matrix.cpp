#include <doctest.h>

#include "wact/matrix.hpp"

using namespace wact;

namespace {

// deterministic small-integer matrices for the property checks
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    std::int64_t pick(std::int64_t lo, std::int64_t hi) { return lo + (std::int64_t)(next() % (hi - lo + 1)); }
};

ExactMatrix random_matrix(Lcg& rng, std::size_t rows, std::size_t cols, const FieldSpec& f) {
    ExactMatrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(f, rng.pick(-4, 4));
    return m;
}

Scalar det(const ExactMatrix& m) {
    // cofactor expansion; only used on tiny minors
    std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    Scalar sum(m.field());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        ExactMatrix sub(n - 1, n - 1, m.field());
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Scalar term = m.at(0, j) * det(sub);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

// brute-force rank oracle: maximal size of a nonzero minor
std::size_t minor_rank(const ExactMatrix& m) {
    std::size_t best = 0;
    std::size_t maxk = std::min(m.rows(), m.cols());
    std::vector<std::size_t> ri, ci;
    std::function<void(std::size_t, std::size_t, std::size_t)> pick_cols = [&](std::size_t k, std::size_t from,
                                                                               std::size_t depth) {
        if (best >= k) return;
        if (depth == k) {
            ExactMatrix sub(k, k, m.field());
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
            if (!det(sub).is_zero()) best = std::max(best, k);
            return;
        }
        for (std::size_t c = from; c < m.cols(); ++c) {
            ci[depth] = c;
            pick_cols(k, c + 1, depth + 1);
        }
    };
    std::function<void(std::size_t, std::size_t, std::size_t)> pick_rows = [&](std::size_t k, std::size_t from,
                                                                               std::size_t depth) {
        if (best >= k) return;
        if (depth == k) {
            pick_cols(k, 0, 0);
            return;
        }
        for (std::size_t r = from; r < m.rows(); ++r) {
            ri[depth] = r;
            pick_rows(k, r + 1, depth + 1);
        }
    };
    for (std::size_t k = 1; k <= maxk; ++k) {
        ri.assign(k, 0);
        ci.assign(k, 0);
        pick_rows(k, 0, 0);
    }
    return best;
}

}  // namespace

TEST_CASE("scalar arithmetic stays canonical") {
    FieldSpec q = FieldSpec::rationals();
    Scalar a(q, 2, 4);
    CHECK(a.str() == "1/2");
    CHECK((a + a).str() == "1");
    Scalar b(q, -3, -6);
    CHECK(b.str() == "1/2");

    FieldSpec f5 = FieldSpec::prime(5);
    Scalar c(f5, -1);
    CHECK(c.residue() == 4);
    CHECK((c * c).residue() == 1);
    CHECK(Scalar(f5, 2).inverse().residue() == 3);
    CHECK_THROWS(FieldSpec::prime(6));
    CHECK_THROWS(Scalar(f5, 1, 5));
}

TEST_CASE("rref of the identity is the identity") {
    FieldSpec q = FieldSpec::rationals();
    ExactMatrix id = ExactMatrix::identity(2, q);
    RrefResult r = rref(id);
    CHECK(r.matrix == id);
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rank agrees with the exhaustive minor oracle over F5") {
    FieldSpec f5 = FieldSpec::prime(5);
    Lcg rng(20240901);
    for (int trial = 0; trial < 6; ++trial) {
        ExactMatrix m = random_matrix(rng, 4, 6, f5);
        CHECK(rank(m) == minor_rank(m));
    }
}

TEST_CASE("nullspace basics") {
    FieldSpec q = FieldSpec::rationals();
    SUBCASE("zero 3x3 matrix has the standard basis as kernel") {
        ExactMatrix z(3, 3, q);
        auto ns = nullspace(z);
        REQUIRE(ns.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) CHECK(ns[i] == unit_vec(3, i, q));
    }
    SUBCASE("single equation kernel") {
        ExactMatrix m(1, 2, q);
        m.at(0, 0) = Scalar(q, 1);
        m.at(0, 1) = Scalar(q, 2);
        auto ns = nullspace(m);
        REQUIRE(ns.size() == 1);
        CHECK(ns[0][0] == Scalar(q, -2));
        CHECK(ns[0][1] == Scalar(q, 1));
    }
    SUBCASE("kernel vectors are exact solutions") {
        Lcg rng(7);
        for (int trial = 0; trial < 5; ++trial) {
            ExactMatrix m = random_matrix(rng, 4, 7, q);
            for (const auto& v : nullspace(m)) CHECK(is_zero(m.apply(v)));
        }
    }
}

TEST_CASE("span membership") {
    FieldSpec q = FieldSpec::rationals();
    Lcg rng(99);
    ExactMatrix rows = random_matrix(rng, 3, 5, q);
    SUBCASE("a row of the matrix is in the span") {
        auto c = span_membership(rows, rows.row(0));
        REQUIRE(c.has_value());
        // c^T rows = row0
        Vec got = zero_vec(5, q);
        for (std::size_t i = 0; i < 3; ++i) got = got + scaled(rows.row(i), (*c)[i]);
        CHECK(got == rows.row(0));
    }
    SUBCASE("zero vector is in every span with zero coefficients") {
        auto c = span_membership(rows, zero_vec(5, q));
        REQUIRE(c.has_value());
        CHECK(is_zero(*c));
    }
    SUBCASE("membership iff rank is unchanged by appending") {
        for (int trial = 0; trial < 10; ++trial) {
            ExactMatrix m = random_matrix(rng, 3, 5, q);
            Vec v(5, Scalar(q));
            for (auto& s : v) s = Scalar(q, rng.pick(-4, 4));
            ExactMatrix stacked(4, 5, q);
            for (std::size_t i = 0; i < 3; ++i) stacked.set_row(i, m.row(i));
            stacked.set_row(3, v);
            CHECK(span_membership(m, v).has_value() == (rank(stacked) == rank(m)));
        }
    }
}

TEST_CASE("solve_affine describes the full solution set") {
    FieldSpec q = FieldSpec::rationals();
    SUBCASE("identity system has the unique solution b") {
        ExactMatrix id = ExactMatrix::identity(3, q);
        Vec b = {Scalar(q, 2), Scalar(q, -1), Scalar(q, 7)};
        auto sol = solve_affine(id, b);
        REQUIRE(sol.consistent);
        CHECK(sol.particular == b);
        CHECK(sol.kernel.empty());
    }
    SUBCASE("underdetermined [1 1] x = 2") {
        ExactMatrix m(1, 2, q);
        m.at(0, 0) = m.at(0, 1) = Scalar(q, 1);
        auto sol = solve_affine(m, {Scalar(q, 2)});
        REQUIRE(sol.consistent);
        CHECK(sol.particular == Vec{Scalar(q, 2), Scalar(q)});
        REQUIRE(sol.kernel.size() == 1);
        CHECK(sol.kernel[0] == Vec{Scalar(q, -1), Scalar(q, 1)});
    }
    SUBCASE("inconsistent [0] x = 1") {
        ExactMatrix m(1, 1, q);
        CHECK_FALSE(solve_affine(m, {Scalar(q, 1)}).consistent);
    }
}

TEST_CASE("rref is idempotent and rank is permutation invariant") {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
        Lcg rng(f.is_rationals() ? 1234 : 4321);
        for (int trial = 0; trial < 8; ++trial) {
            ExactMatrix m = random_matrix(rng, 5, 7, f);
            RrefResult r1 = rref(m);
            RrefResult r2 = rref(r1.matrix);
            CHECK(r1.matrix == r2.matrix);
            CHECK(r1.rank == r2.rank);
            CHECK(r1.pivot_cols == r2.pivot_cols);

            // random row and column permutations keep the rank
            ExactMatrix p = m;
            for (int s = 0; s < 4; ++s) {
                std::size_t i = rng.pick(0, 4), j = rng.pick(0, 4);
                for (std::size_t c = 0; c < 7; ++c) std::swap(p.at(i, c), p.at(j, c));
                std::size_t ci = rng.pick(0, 6), cj = rng.pick(0, 6);
                for (std::size_t rr = 0; rr < 5; ++rr) std::swap(p.at(rr, ci), p.at(rr, cj));
            }
            CHECK(rank(p) == r1.rank);
        }
    }
}

TEST_CASE("F_p results match reduction of rational results away from bad primes") {
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f5 = FieldSpec::prime(5);
    Lcg rng(555);
    int compared = 0;
    for (int trial = 0; trial < 12; ++trial) {
        ExactMatrix m = random_matrix(rng, 4, 6, q);
        RrefResult rq = rref(m);
        ExactMatrix m5(4, 6, f5);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j) m5.at(i, j) = m.at(i, j).reduced_mod(5);
        RrefResult rp = rref(m5);
        CHECK(rp.rank <= rq.rank);
        bool reducible = true;
        for (std::size_t i = 0; i < 4 && reducible; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                if (rq.matrix.at(i, j).rational().get_den() % 5 == 0) {
                    reducible = false;
                    break;
                }
        if (!reducible || rp.rank != rq.rank || rp.pivot_cols != rq.pivot_cols) continue;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j) CHECK(rq.matrix.at(i, j).reduced_mod(5) == rp.matrix.at(i, j));
        ++compared;
    }
    CHECK(compared > 0);
}

TEST_CASE("incremental echelon basis matches batch rref") {
    FieldSpec q = FieldSpec::rationals();
    Lcg rng(31337);
    for (int trial = 0; trial < 5; ++trial) {
        ExactMatrix m = random_matrix(rng, 6, 5, q);
        EchelonBasis eb(5, q);
        for (std::size_t i = 0; i < 6; ++i) eb.insert(m.row(i));
        RrefResult r = rref(m);
        CHECK(eb.rank() == r.rank);
        ExactMatrix nonzero(r.rank, 5, q);
        for (std::size_t i = 0; i < r.rank; ++i) nonzero.set_row(i, r.matrix.row(i));
        CHECK(eb.to_matrix() == nonzero);
    }
}
