#include "uinv/generators.hpp"

namespace uinv {

std::vector<GenIndex> all_indices(int n) {
    std::vector<GenIndex> out;
    out.reserve(index_count(n));
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < k; ++i) out.push_back({k, i});
    }
    return out;
}

PolyMatrix build_X(int n) {
    if (n < 1) throw BadIndex("board size must be >= 1");
    PolyMatrix x(n, n);
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) x(a - 1, b - 1) = Poly::var(VarId::entry(a, b, n));
    }
    return x;
}

PolyMatrix build_Xstar(int n) { return adjugate(build_X(n)); }

PolyMatrix build_Y(int i, int n) {
    if (n < 1) throw BadIndex("board size must be >= 1");
    if (i < 0 || i > n - 1) throw BadIndex("Y index out of range");
    const PolyMatrix x = build_X(n);
    if (i == 0) return x;
    return stack_Y(x, build_Xstar(n), i);
}

Poly build_J(int k, int i, int n) {
    check_index({k, i}, n);
    return corner_minor(build_Y(i, n), k);
}

GenSet generator_set(int n) {
    const PolyMatrix x = build_X(n);
    const PolyMatrix xstar = build_Xstar(n);
    GenSet set;
    set.n = n;
    for (const GenIndex idx : all_indices(n)) {
        GenMember m;
        m.index = idx;
        m.poly = det_cofactor(generator_block(x, xstar, idx));
        m.degree = m.poly.total_degree();
        m.terms = m.poly.term_count();
        set.members.push_back(std::move(m));
    }
    return set;
}

Fingerprint invariant_fingerprint(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("fingerprint of a non-square matrix");
    Fingerprint fp;
    fp.n = static_cast<int>(a.rows());
    fp.values = generator_values_with(a, adjugate(a), [](const RatMatrix& m) { return det_bareiss(m); });
    return fp;
}

Assignment entry_assignment(const RatMatrix& m) {
    const int n = static_cast<int>(m.rows());
    Assignment point;
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) point.emplace(VarId::entry(a, b, n), m(a - 1, b - 1));
    }
    return point;
}

Fingerprint symbolic_fingerprint(const GenSet& gens, const RatMatrix& a) {
    if (a.rows() != gens.n) throw std::invalid_argument("matrix size does not match generator set");
    const Assignment point = entry_assignment(a);
    Fingerprint fp;
    fp.n = gens.n;
    for (const auto& m : gens.members) fp.values.push_back(eval(m.poly, point));
    return fp;
}

RatMatrix conjugate(const RatMatrix& g, const RatMatrix& a) {
    return mat_mul(mat_mul(mat_inverse(g), a), g);
}

PolyMatrix conjugate(const PolyMatrix& g, const PolyMatrix& a) {
    return mat_mul(mat_mul(mat_inverse(g), a), g);
}

PolyMatrix elementary_unipotent(int n, int a, int b, const Poly& t) {
    if (a < 1 || a > n || b < 1 || b > n || a == b) throw BadIndex("elementary position out of range");
    PolyMatrix u = identity<Poly>(n);
    u(a - 1, b - 1) = t;
    return u;
}

Poly rho(const PolyMatrix& g, const Poly& f, int n) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("group element has wrong size");
    const PolyMatrix moved = conjugate(g, build_X(n));
    Substitution images;
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) images.emplace(VarId::entry(a, b, n), moved(a - 1, b - 1));
    }
    return substitute(f, images);
}

InvarianceVerdict check_invariance(const Poly& f, int n, int trials, std::uint64_t seed) {
    return check_invariance_fn([&](const RatMatrix& a) { return eval(f, entry_assignment(a)); }, n, trials,
                               seed);
}

}  // namespace uinv
