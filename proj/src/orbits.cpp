#include "uinv/orbits.hpp"

#include <stdexcept>

namespace uinv {

std::optional<int> first_vanishing_corner(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix is not square");
    for (int k = 1; k <= a.rows(); ++k) {
        if (corner_minor(a, k).is_zero()) return k;
    }
    return std::nullopt;
}

bool in_omega(const RatMatrix& a) { return !first_vanishing_corner(a).has_value(); }

bool in_L(const RatMatrix& a) {
    if (a.rows() != a.cols()) return false;
    const Eigen::Index n = a.rows();
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            if (r + c < n - 1 && !a(r, c).is_zero()) return false;
            if (r + c == n - 1 && a(r, c).is_zero()) return false;
        }
    }
    return true;
}

SlicePoint canonicalize(const RatMatrix& a) {
    if (const auto k = first_vanishing_corner(a)) throw NotInOmega(*k);
    try {
        return solve_slice(invariant_fingerprint(a));
    } catch (const DegenerateInput& e) {
        throw DegenerateInput(std::string("non-generic matrix in Omega: ") + e.what());
    }
}

bool is_generic(const RatMatrix& a) {
    try {
        canonicalize(a);
        return true;
    } catch (const DegenerateInput&) {
        return false;
    }
}

std::optional<RatMatrix> conjugating_unipotent(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols()) throw std::invalid_argument("matrix is not square");
    if (a.rows() != b.rows()) return std::nullopt;
    const Eigen::Index n = a.rows();
    // Unknowns u(p, q), p < q. Equation (r, c) of a u - u b = 0:
    //   sum_{p<c} a(r,p) u(p,c) - sum_{q>r} u(r,q) b(q,c) = b(r,c) - a(r,c).
    std::vector<std::pair<Eigen::Index, Eigen::Index>> unknowns;
    for (Eigen::Index p = 0; p < n; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) unknowns.emplace_back(p, q);
    }
    RatMatrix sys = RatMatrix::Constant(n * n, static_cast<Eigen::Index>(unknowns.size()), Rational(0));
    std::vector<Rational> rhs;
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            const Eigen::Index eq = r * n + c;
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                const auto [p, q] = unknowns[u];
                if (q == c) sys(eq, static_cast<Eigen::Index>(u)) += a(r, p);
                if (p == r) sys(eq, static_cast<Eigen::Index>(u)) -= b(q, c);
            }
            rhs.push_back(b(r, c) - a(r, c));
        }
    }
    const auto solution = solve_linear(sys, rhs);
    if (!solution) return std::nullopt;
    RatMatrix u = identity<Rational>(static_cast<int>(n));
    for (std::size_t j = 0; j < unknowns.size(); ++j) u(unknowns[j].first, unknowns[j].second) = (*solution)[j];
    return u;
}

bool orbit_equivalent(const RatMatrix& a, const RatMatrix& b) {
    if (const auto k = first_vanishing_corner(a)) throw NotInOmega(*k);
    if (const auto k = first_vanishing_corner(b)) throw NotInOmega(*k);
    if (a.rows() != b.rows()) return false;
    const Fingerprint fa = invariant_fingerprint(a);
    if (fa != invariant_fingerprint(b)) return false;
    try {
        solve_slice(fa);
        return true;
    } catch (const DegenerateInput&) {
        return conjugating_unipotent(a, b).has_value();
    }
}

namespace {

using DualQ = Dual<Rational>;

// Directional derivative of every generator at `a` along e_{row,col}.
std::vector<Rational> generator_derivatives(const RatMatrix& a, Eigen::Index row, Eigen::Index col) {
    const Eigen::Index n = a.rows();
    Mat<DualQ> d(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) d(r, c) = DualQ(a(r, c), Rational(r == row && c == col ? 1 : 0));
    }
    auto det_fn = [](const Mat<DualQ>& m) { return det_cofactor(m); };
    const Mat<DualQ> adj = adjugate_with(d, det_fn);
    std::vector<Rational> out;
    for (auto& v : generator_values_with(d, adj, det_fn)) out.push_back(std::move(v.eps));
    return out;
}

}  // namespace

RatMatrix generator_jacobian(const RatMatrix& a) {
    const int n = static_cast<int>(a.rows());
    RatMatrix jac(index_count(n), n * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const auto column = generator_derivatives(a, r, c);
            for (int g = 0; g < index_count(n); ++g) jac(g, r * n + c) = column[g];
        }
    }
    return jac;
}

RatMatrix slice_jacobian(const RatMatrix& b) {
    const int n = static_cast<int>(b.rows());
    const auto order = slice_order(n);
    RatMatrix jac(index_count(n), index_count(n));
    for (int col = 0; col < index_count(n); ++col) {
        const auto [a, c] = slice_position(order[col], n);
        const auto column = generator_derivatives(b, a - 1, c - 1);
        for (int row = 0; row < index_count(n); ++row) jac(row, col) = column[lex_position(order[row])];
    }
    return jac;
}

std::string to_string(VerdictStatus status) {
    switch (status) {
        case VerdictStatus::Pass: return "pass";
        case VerdictStatus::Fail: return "fail";
        case VerdictStatus::Inconclusive: break;
    }
    return "inconclusive";
}

IndependenceVerdict independence_check(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("board size must be >= 1");
    IndependenceVerdict verdict;
    verdict.n = n;
    verdict.seed = seed;
    verdict.expected = index_count(n);
    for (int attempt = 0; attempt <= kIndependenceRetries; ++attempt) {
        Sampler sampler(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        verdict.attempts = attempt + 1;
        verdict.rank = rank(generator_jacobian(sampler.omega_matrix(n)));
        if (verdict.rank == verdict.expected) {
            verdict.status = VerdictStatus::Pass;
            return verdict;
        }
    }
    verdict.status = VerdictStatus::Inconclusive;
    return verdict;
}

namespace {

std::string coord_name(GenIndex idx) {
    return "s[" + std::to_string(idx.k) + "][" + std::to_string(idx.i) + "]";
}

TriangularityVerdict symbolic_triangularity(int n, const RatMatrix& b, TriangularityVerdict verdict) {
    const auto order = slice_order(n);
    const Assignment point = slice_assignment(SlicePoint::from_matrix(b));
    for (std::size_t row = 0; row < order.size(); ++row) {
        const Poly restricted = restricted_generator(order[row], n);
        const TriDecomp d = split_linear(restricted, order[row], n);
        for (std::size_t col = 0; col < order.size(); ++col) {
            const Poly entry = partial(restricted, VarId::slice(order[col], n));
            if (col > row && !entry.is_zero()) {
                verdict.failure = "d pi(J) / d " + coord_name(order[col]) + " nonzero above the diagonal in row " +
                                  coord_name(order[row]);
                return verdict;
            }
            if (col == row && entry != d.phi) {
                verdict.failure = "diagonal entry differs from phi in row " + coord_name(order[row]);
                return verdict;
            }
        }
        Rational value = eval(d.phi, point);
        if (value.is_zero()) {
            verdict.status = VerdictStatus::Inconclusive;
            verdict.failure = "phi vanishes at the sample point in row " + coord_name(order[row]);
            verdict.diagonal.clear();
            return verdict;
        }
        verdict.diagonal.push_back(std::move(value));
    }
    verdict.status = VerdictStatus::Pass;
    return verdict;
}

TriangularityVerdict numeric_triangularity(int n, const RatMatrix& b, TriangularityVerdict verdict) {
    const auto order = slice_order(n);
    const RatMatrix jac = slice_jacobian(b);
    for (int row = 0; row < jac.rows(); ++row) {
        for (int col = row + 1; col < jac.cols(); ++col) {
            if (!jac(row, col).is_zero()) {
                verdict.failure = "entry above the diagonal nonzero at row " + coord_name(order[row]) + ", column " +
                                  coord_name(order[col]);
                return verdict;
            }
        }
        if (jac(row, row).is_zero()) {
            verdict.status = VerdictStatus::Inconclusive;
            verdict.failure = "zero diagonal entry in row " + coord_name(order[row]);
            verdict.diagonal.clear();
            return verdict;
        }
        verdict.diagonal.push_back(jac(row, row));
    }
    verdict.status = VerdictStatus::Pass;
    return verdict;
}

}  // namespace

TriangularityVerdict slice_triangularity_check(int n, std::uint64_t seed, CheckMode mode) {
    if (n < 1) throw std::invalid_argument("board size must be >= 1");
    TriangularityVerdict verdict;
    verdict.mode = mode;
    verdict.n = n;
    verdict.seed = seed;
    const TriangularityVerdict fresh = verdict;
    for (int attempt = 0; attempt <= kIndependenceRetries; ++attempt) {
        Sampler sampler(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        const RatMatrix b = sampler.slice_matrix(n);
        TriangularityVerdict result = fresh;
        result.attempts = attempt + 1;
        try {
            result = mode == CheckMode::Symbolic ? symbolic_triangularity(n, b, result)
                                                 : numeric_triangularity(n, b, result);
        } catch (const StructureViolation& e) {
            result.failure = e.what();
            return result;
        }
        if (result.status != VerdictStatus::Inconclusive) return result;
        verdict = std::move(result);
    }
    return verdict;
}

}  // namespace uinv
