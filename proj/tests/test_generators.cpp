#include "oracles.hpp"
#include "uinv/determinant.hpp"
#include "uinv/errors.hpp"
#include "uinv/generators.hpp"
#include "uinv/random.hpp"

#include <gtest/gtest.h>

namespace uinv {
namespace {

Poly x(int a, int b, int n) { return Poly::var(VarId::entry(a, b, n)); }

// Row r (1-based) of a matrix as a 1 x n block.
PolyMatrix row_of(const PolyMatrix& m, int r) { return m.row(r - 1); }

PolyMatrix stack_rows(const std::vector<PolyMatrix>& rows) {
    PolyMatrix out(static_cast<Eigen::Index>(rows.size()), rows.front().cols());
    for (std::size_t r = 0; r < rows.size(); ++r) out.row(static_cast<Eigen::Index>(r)) = rows[r];
    return out;
}

// J[k][i] from its definition, with the adjugate taken from Leibniz cofactors
// and the k x k lower-left block assembled row by row.
Poly oracle_J(int k, int i, int n) {
    PolyMatrix xm(n, n);
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) xm(a - 1, b - 1) = x(a, b, n);
    }
    const PolyMatrix adj = oracle::leibniz_adjugate(xm);
    PolyMatrix block(k, k);
    for (int r = 0; r < k; ++r) {
        // Y_i = rows i+1..n of X, then rows n-i+1..n of X*. Its last k rows:
        const int y_row = n - k + r;  // 0-based row of Y_i
        for (int c = 0; c < k; ++c) {
            block(r, c) = y_row < n - i ? xm(i + y_row, c) : adj(y_row, c);
        }
    }
    return oracle::leibniz_det(block);
}

TEST(BuildX, Entries) {
    EXPECT_EQ(build_X(3)(2, 0), x(3, 1, 3));
    EXPECT_EQ(build_Xstar(2)(1, 0), -x(2, 1, 2));
    EXPECT_EQ(build_Xstar(2)(1, 1), x(1, 1, 2));
    EXPECT_EQ(build_Xstar(3), oracle::leibniz_adjugate(build_X(3)));
}

TEST(BuildY, Examples) {
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(build_Y(0, n), build_X(n));
    const PolyMatrix x2 = build_X(2);
    const PolyMatrix xs2 = build_Xstar(2);
    EXPECT_EQ(build_Y(1, 2), stack_rows({row_of(x2, 2), row_of(xs2, 2)}));
    const PolyMatrix x3 = build_X(3);
    const PolyMatrix xs3 = build_Xstar(3);
    EXPECT_EQ(build_Y(2, 3), stack_rows({row_of(x3, 3), row_of(xs3, 2), row_of(xs3, 3)}));
    EXPECT_THROW(build_Y(3, 3), BadIndex);
    EXPECT_THROW(build_Y(-1, 3), BadIndex);
}

TEST(BuildJ, Examples) {
    EXPECT_EQ(build_J(1, 0, 3), x(3, 1, 3));
    EXPECT_EQ(build_J(2, 1, 2), x(2, 1, 2) * x(1, 1, 2) + x(2, 1, 2) * x(2, 2, 2));
    // The 3x3 determinant forms for n = 3.
    const PolyMatrix x3 = build_X(3);
    const PolyMatrix xs3 = build_Xstar(3);
    EXPECT_EQ(build_J(3, 2, 3), det(stack_rows({row_of(x3, 3), row_of(xs3, 2), row_of(xs3, 3)})));
    EXPECT_EQ(build_J(3, 1, 3), det(stack_rows({row_of(x3, 2), row_of(x3, 3), row_of(xs3, 3)})));
    EXPECT_THROW(build_J(2, 2, 3), BadIndex);
    EXPECT_THROW(build_J(4, 0, 3), BadIndex);
}

TEST(BuildJ, MatchesLeibnizOracle) {
    for (int n = 1; n <= 4; ++n) {
        for (const GenIndex idx : all_indices(n)) {
            EXPECT_EQ(build_J(idx.k, idx.i, n), oracle_J(idx.k, idx.i, n)) << "J[" << idx.k << "][" << idx.i << "]";
        }
    }
}

TEST(BuildJ, ZeroAdjugateRowsGiveCornerMinor) {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) EXPECT_EQ(build_J(k, 0, n), corner_minor(build_X(n), k));
    }
}

TEST(GeneratorSet, Counts) {
    EXPECT_EQ(generator_set(1).size(), 1u);
    EXPECT_EQ(generator_set(2).size(), 3u);
    EXPECT_EQ(generator_set(3).size(), 6u);
    EXPECT_EQ(generator_set(4).size(), 10u);
    const GenSet g3 = generator_set(3);
    std::vector<GenIndex> order;
    for (const auto& m : g3.members) order.push_back(m.index);
    EXPECT_EQ(order, (std::vector<GenIndex>{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}));
}

TEST(GeneratorSet, DegreeFormulaIsExact) {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& m : generator_set(n).members) {
            const int expected = (m.index.k - m.index.i) + m.index.i * (n - 1);
            EXPECT_EQ(m.degree, expected) << "n=" << n << " J[" << m.index.k << "][" << m.index.i << "]";
            EXPECT_EQ(m.degree, m.poly.total_degree());
            EXPECT_EQ(m.terms, m.poly.term_count());
        }
    }
}

TEST(Rho, Examples) {
    const Poly t = Poly::var(VarId::param());
    const PolyMatrix u = elementary_unipotent(2, 1, 2, t);
    EXPECT_EQ(rho(u, x(2, 1, 2), 2), x(2, 1, 2));
    // Conjugation moves x11 by t*x21.
    EXPECT_EQ(rho(u, x(1, 1, 2), 2), x(1, 1, 2) - t * x(2, 1, 2));
    const Poly f = x(1, 1, 3) * x(2, 3, 3) - Poly(4) * x(3, 2, 3);
    EXPECT_EQ(rho(identity<Poly>(3), f, 3), f);
    EXPECT_TRUE((rho(u, build_J(2, 1, 2), 2) - build_J(2, 1, 2)).is_zero());
}

TEST(Rho, ActionLaw) {
    const Poly f = x(1, 1, 3) * x(2, 3, 3) + x(1, 2, 3) - Poly(Rational(2, 3)) * x(3, 1, 3) * x(3, 3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Sampler rng(derive_seed(21, static_cast<std::uint64_t>(trial)));
        const RatMatrix u = rng.unipotent(3);
        const RatMatrix v = rng.unipotent(3);
        const RatMatrix a = rng.matrix(3);
        const Assignment point = entry_assignment(a);
        const Rational lhs = eval(rho(to_poly(RatMatrix(mat_mul(u, v))), f, 3), point);
        const Rational rhs = eval(rho(to_poly(u), rho(to_poly(v), f, 3), 3), point);
        EXPECT_EQ(lhs, rhs);
        // Direct definition: (rho_g f)(A) = f(g^{-1} A g).
        EXPECT_EQ(eval(rho(to_poly(u), f, 3), point), eval(f, entry_assignment(conjugate(u, a))));
    }
}

TEST(CheckInvariance, GeneratorsPassUpToEight) {
    for (int n = 1; n <= 8; ++n) {
        for (const GenIndex idx : all_indices(n)) {
            const auto value = [idx](const RatMatrix& a) { return det(generator_block(a, adjugate(a), idx)); };
            const auto seed = derive_seed(100 + static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(lex_position(idx)));
            const auto verdict = check_invariance_fn(value, n, kDefaultTrials, seed);
            EXPECT_TRUE(verdict.pass) << "n=" << n << " J[" << idx.k << "][" << idx.i << "]";
            EXPECT_EQ(verdict.trials, kDefaultTrials);
            EXPECT_EQ(verdict.seed, seed);
        }
    }
}

TEST(CheckInvariance, ExpandedPolynomialsPass) {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& m : generator_set(n).members) {
            EXPECT_TRUE(check_invariance(m.poly, n, 5, 3).pass) << "n=" << n;
        }
    }
}

TEST(CheckInvariance, NonInvariantFailsWithWitness) {
    const Poly f = x(1, 1, 2);
    const auto verdict = check_invariance(f, 2, kDefaultTrials, 42);
    ASSERT_FALSE(verdict.pass);
    ASSERT_TRUE(verdict.witness.has_value());
    const auto& w = *verdict.witness;
    EXPECT_EQ(w.before, eval(f, entry_assignment(w.a)));
    EXPECT_EQ(w.after, eval(f, entry_assignment(conjugate(w.u, w.a))));
    EXPECT_NE(w.before, w.after);
    // The shift is exactly -t * a21 with t the strictly upper entry of u.
    EXPECT_EQ(w.after - w.before, -(w.u(0, 1) * w.a(1, 0)));
}

TEST(CheckInvariance, ConstantsPass) {
    const auto verdict = check_invariance(Poly(5), 3, kDefaultTrials, 1);
    EXPECT_TRUE(verdict.pass);
    EXPECT_FALSE(verdict.witness.has_value());
}

TEST(CheckInvariance, DeterministicForSeed) {
    const auto a = check_invariance(x(1, 2, 3), 3, 10, 77);
    const auto b = check_invariance(x(1, 2, 3), 3, 10, 77);
    ASSERT_FALSE(a.pass);
    EXPECT_EQ(a.witness->trial, b.witness->trial);
    EXPECT_EQ(a.witness->a, b.witness->a);
    EXPECT_EQ(a.witness->u, b.witness->u);
}

TEST(GeneratorProperties, SymbolicInvarianceSmallOrders) {
    const Poly t = Poly::var(VarId::param());
    for (int n = 1; n <= 3; ++n) {
        for (const auto& m : generator_set(n).members) {
            for (int a = 1; a <= n; ++a) {
                for (int b = a + 1; b <= n; ++b) {
                    const Poly moved = rho(elementary_unipotent(n, a, b, t), m.poly, n);
                    EXPECT_TRUE((moved - m.poly).is_zero())
                        << "n=" << n << " J[" << m.index.k << "][" << m.index.i << "] u=" << a << b;
                }
            }
        }
    }
}

TEST(GeneratorProperties, FastPathMatchesSymbolic) {
    for (int n = 1; n <= 4; ++n) {
        const GenSet gens = generator_set(n);
        Sampler rng(derive_seed(31, static_cast<std::uint64_t>(n)));
        for (int trial = 0; trial < 10; ++trial) {
            const RatMatrix a = rng.matrix(n);
            EXPECT_EQ(invariant_fingerprint(a), symbolic_fingerprint(gens, a));
        }
    }
}

TEST(GeneratorProperties, HardestGeneratorIdentity) {
    // J[n][n-1] = det^{n-2} * (X^2)_{n1} for n >= 2.
    for (int n = 2; n <= 4; ++n) {
        const PolyMatrix xm = build_X(n);
        const PolyMatrix sq = mat_mul(xm, xm);
        EXPECT_EQ(build_J(n, n - 1, n), pow(det(xm), static_cast<unsigned>(n - 2)) * sq(n - 1, 0));
    }
}

}  // namespace
}  // namespace uinv
