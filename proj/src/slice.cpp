#include "uinv/slice.hpp"

#include <map>
#include <mutex>

namespace uinv {

PolyMatrix build_S(int n) {
    if (n < 1) throw BadIndex("board size must be >= 1");
    PolyMatrix s(n, n);
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            const auto coord = slice_coord_at(a, b, n);
            s(a - 1, b - 1) = coord ? Poly::var(VarId::slice(*coord, n)) : Poly();
        }
    }
    return s;
}

std::strong_ordering coord_cmp(GenIndex a, GenIndex b, int n) {
    check_index(a, n);
    check_index(b, n);
    return slice_rank(a, n) <=> slice_rank(b, n);
}

std::vector<GenIndex> slice_order(int n) {
    std::vector<GenIndex> out;
    out.reserve(index_count(n));
    for (int r = 0; r < index_count(n); ++r) out.push_back(slice_index_at_rank(r, n));
    return out;
}

Poly restrict_to_slice(const Poly& f, int n) {
    Substitution images;
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            const auto coord = slice_coord_at(a, b, n);
            images.emplace(VarId::entry(a, b, n), coord ? Poly::var(VarId::slice(*coord, n)) : Poly());
        }
    }
    return substitute(f, images);
}

Poly restricted_generator(GenIndex idx, int n) {
    check_index(idx, n);
    if (n <= kSymbolicSliceLimit) return SliceSystem::get(n)->at(idx).phi * Poly::var(VarId::slice(idx, n)) +
                                          SliceSystem::get(n)->at(idx).psi;
    const PolyMatrix s = build_S(n);
    return det_cofactor(generator_block(s, adjugate(s), idx));
}

TriDecomp split_linear(const Poly& restricted, GenIndex idx, int n) {
    const VarId v = VarId::slice(idx, n);
    const std::string name = v.name();
    const int degree = degree_in(restricted, v);
    if (degree != 1) {
        throw StructureViolation("restriction of J[" + std::to_string(idx.k) + "][" + std::to_string(idx.i) +
                                 "] has degree " + std::to_string(degree) + " in " + name);
    }
    TriDecomp d{idx, coefficient_of(restricted, v, 1), coefficient_of(restricted, v, 0)};
    if (d.phi.is_zero()) throw StructureViolation("vanishing phi for " + name);
    for (const Poly* part : {&d.phi, &d.psi}) {
        for (const VarId w : part->variables()) {
            if (w.kind() != VarKind::Slice || w.board() != n || !(w < v)) {
                throw StructureViolation(w.name() + " is not smaller than " + name);
            }
        }
    }
    return d;
}

namespace {

TriDecomp decompose_direct(const PolyMatrix& s, const PolyMatrix& s_adj, GenIndex idx, int n) {
    return split_linear(det_cofactor(generator_block(s, s_adj, idx)), idx, n);
}

}  // namespace

TriDecomp tri_decompose(int k, int i, int n) {
    check_index({k, i}, n);
    if (n <= kSymbolicSliceLimit) return SliceSystem::get(n)->at({k, i});
    const PolyMatrix s = build_S(n);
    return decompose_direct(s, adjugate(s), {k, i}, n);
}

BlockCheck block_formula_check(GenIndex idx, int n) {
    check_index(idx, n);
    const auto system = n <= kSymbolicSliceLimit ? SliceSystem::get(n) : std::make_shared<SliceSystem>(n);
    const PolyMatrix& s = system->s();
    const PolyMatrix& s_adj = system->s_adjugate();
    const auto [k, i] = idx;

    BlockCheck check;
    const PolyMatrix c = s_adj.bottomLeftCorner(i, i);
    const PolyMatrix s_block = s.bottomRows(k - i).middleCols(i, k - i);
    check.det_c = det_cofactor(c);
    check.det_s = det_cofactor(s_block);
    check.sign = (i * (k - i)) % 2 == 0 ? 1 : -1;
    check.c_is_monomial = check.det_c.term_count() == 1;
    if (check.c_is_monomial) {
        for (const auto& pw : check.det_c.terms()[0].mono.powers()) {
            if (pw.var.kind() != VarKind::Slice || pw.var.indices().second != 0) check.c_is_monomial = false;
        }
    }
    const TriDecomp& d = system->at(idx);
    const Poly restricted = d.phi * Poly::var(VarId::slice(idx, n)) + d.psi;
    check.matches = restricted == Poly(Rational(check.sign)) * check.det_c * check.det_s;
    return check;
}

RatMatrix SlicePoint::matrix() const {
    RatMatrix b = RatMatrix::Constant(n, n, Rational(0));
    for (const GenIndex idx : all_indices(n)) {
        const auto [a, col] = slice_position(idx, n);
        b(a - 1, col - 1) = at(idx);
    }
    return b;
}

SlicePoint SlicePoint::from_matrix(const RatMatrix& b) {
    SlicePoint p;
    p.n = static_cast<int>(b.rows());
    for (const GenIndex idx : all_indices(p.n)) {
        const auto [a, col] = slice_position(idx, p.n);
        p.coords.push_back(b(a - 1, col - 1));
    }
    return p;
}

Assignment slice_assignment(const SlicePoint& p) {
    Assignment point;
    for (const GenIndex idx : all_indices(p.n)) point.emplace(VarId::slice(idx, p.n), p.at(idx));
    return point;
}

SliceSystem::SliceSystem(int n) : n_(n), s_(build_S(n)), s_adj_(adjugate(s_)) {
    decomps_.reserve(index_count(n));
    for (const GenIndex idx : slice_order(n)) decomps_.push_back(decompose_direct(s_, s_adj_, idx, n));
}

std::shared_ptr<const SliceSystem> SliceSystem::get(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const SliceSystem>> cache;
    {
        std::lock_guard lock(mutex);
        const auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // Built outside the lock; a concurrent duplicate build is discarded.
    auto built = std::make_shared<const SliceSystem>(n);
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(built)).first->second;
}

namespace {

void check_values(const Fingerprint& values) {
    if (values.n < 1 || static_cast<int>(values.values.size()) != index_count(values.n)) {
        throw std::invalid_argument("fingerprint does not cover all n(n+1)/2 generators");
    }
}

Rational solve_step(const Rational& target, const Rational& phi, const Rational& psi, GenIndex idx) {
    const std::string name = "s[" + std::to_string(idx.k) + "][" + std::to_string(idx.i) + "]";
    if (phi.is_zero()) throw DegenerateInput("leading coefficient of " + name + " vanishes");
    Rational value = (target - psi) / phi;
    if (idx.i == 0 && value.is_zero()) throw DegenerateInput("anti-diagonal coordinate " + name + " is zero");
    return value;
}

// J[k][i] at a numeric matrix, computing only the adjugate rows it uses.
Rational generator_at(const RatMatrix& b, GenIndex idx) {
    const int n = static_cast<int>(b.rows());
    RatMatrix adj_rows = RatMatrix::Constant(n, n, Rational(0));
    for (int r = n - idx.i; r < n; ++r) {
        for (int c = 0; c < idx.k; ++c) {
            const Rational cof = det_bareiss(drop_row_col(b, c, r));
            adj_rows(r, c) = (r + c) % 2 == 0 ? cof : -cof;
        }
    }
    return det_bareiss(generator_block(b, adj_rows, idx));
}

}  // namespace

SlicePoint solve_slice(const Fingerprint& values) {
    check_values(values);
    const int n = values.n;
    if (n > kSymbolicSliceLimit) return solve_slice_numeric(values);
    const auto system = SliceSystem::get(n);
    SlicePoint point;
    point.n = n;
    point.coords.assign(index_count(n), Rational(0));
    Assignment solved;
    for (const TriDecomp& d : system->decompositions()) {
        const Rational value = solve_step(values.at(d.index), eval(d.phi, solved), eval(d.psi, solved), d.index);
        solved.emplace(VarId::slice(d.index, n), value);
        point.coords[lex_position(d.index)] = value;
    }
    return point;
}

SlicePoint solve_slice_numeric(const Fingerprint& values) {
    check_values(values);
    const int n = values.n;
    SlicePoint point;
    point.n = n;
    point.coords.assign(index_count(n), Rational(0));
    // Unsolved coordinates stay 0; the generator being solved never depends on them.
    RatMatrix b = RatMatrix::Constant(n, n, Rational(0));
    for (const GenIndex idx : slice_order(n)) {
        const auto [a, col] = slice_position(idx, n);
        b(a - 1, col - 1) = Rational(0);
        const Rational psi = generator_at(b, idx);
        b(a - 1, col - 1) = Rational(1);
        const Rational phi = generator_at(b, idx) - psi;
        const Rational value = solve_step(values.at(idx), phi, psi, idx);
        b(a - 1, col - 1) = value;
        point.coords[lex_position(idx)] = value;
    }
    return point;
}

}  // namespace uinv
