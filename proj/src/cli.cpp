#include "uinv/cli.hpp"

#include "uinv/io.hpp"
#include "uinv/orbits.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace uinv::cli {

namespace {

using io::Json;

struct Config {
    int n = 2;
    std::uint64_t seed = 0;
    int trials = kDefaultTrials;
    std::string format;
    std::string out_path;
    std::string input;
    bool force = false;
    bool tamper = false;
};

class GuardViolation : public Error {
public:
    using Error::Error;
};

void check_guard(const Config& cfg, int limit, const std::string& command) {
    if (cfg.n < 1) throw GuardViolation(command + ": --n must be >= 1");
    if (cfg.n > limit && !cfg.force) {
        throw GuardViolation(command + ": n = " + std::to_string(cfg.n) + " exceeds the default limit " +
                             std::to_string(limit) + " (use --force to override)");
    }
}

std::string gen_name(GenIndex idx) { return "J[" + std::to_string(idx.k) + "][" + std::to_string(idx.i) + "]"; }

std::string matrix_text(const RatMatrix& m) {
    std::string out = "[";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out += r == 0 ? "[" : ", [";
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ", ";
            out += m(r, c).str();
        }
        out += "]";
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// gen

std::string cmd_gen(const Config& cfg) {
    check_guard(cfg, kGenGuard, "gen");
    const GenSet gens = generator_set(cfg.n);
    std::vector<Poly> restrictions;
    for (const auto& m : gens.members) restrictions.push_back(restrict_to_slice(m.poly, cfg.n));
    if (cfg.format == "json") return io::genset_to_json(gens, restrictions).dump(2) + "\n";
    std::ostringstream os;
    for (std::size_t j = 0; j < gens.members.size(); ++j) {
        const auto& m = gens.members[j];
        os << gen_name(m.index) << " (degree " << m.degree << ", " << m.terms << " terms) = " << to_text(m.poly)
           << "\n";
        os << "  restricted: " << to_text(restrictions[j]) << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
    std::string suite;
    std::string target;
    VerdictStatus status = VerdictStatus::Pass;
    std::string detail;
};

class VerifyRun {
public:
    explicit VerifyRun(const Config& cfg) : cfg_(cfg), n_(cfg.n) {}

    std::vector<CheckResult> run() {
        randomized_invariance();
        if (n_ <= 3) symbolic_invariance();
        if (n_ <= 4) fast_path_agreement();
        triangular_structure();
        block_formula();
        triangularity();
        independence();
        return std::move(results_);
    }

private:
    bool tampered(GenIndex idx) const { return cfg_.tamper && idx == GenIndex{2, 1}; }

    void add(std::string suite, std::string target, VerdictStatus status, std::string detail) {
        results_.push_back({std::move(suite), std::move(target), status, std::move(detail)});
    }

    void randomized_invariance() {
        for (const GenIndex idx : all_indices(n_)) {
            const auto value = [&](const RatMatrix& a) {
                const RatMatrix block = generator_block(a, adjugate(a), idx);
                Rational v = det_bareiss(block);
                if (tampered(idx)) v += a(0, 0);
                return v;
            };
            const auto seed = derive_seed(cfg_.seed, static_cast<std::uint64_t>(lex_position(idx)));
            const auto verdict = check_invariance_fn(value, n_, cfg_.trials, seed);
            std::string detail = std::to_string(verdict.trials) + " trials, seed " + std::to_string(seed);
            if (!verdict.pass) {
                const auto& w = *verdict.witness;
                detail += "; witness trial " + std::to_string(w.trial) + ": u = " + matrix_text(w.u) +
                          ", A = " + matrix_text(w.a) + ", f(A) = " + w.before.str() +
                          ", f(u^-1 A u) = " + w.after.str();
            }
            add("invariance", gen_name(idx), verdict.pass ? VerdictStatus::Pass : VerdictStatus::Fail,
                std::move(detail));
        }
    }

    void symbolic_invariance() {
        const GenSet gens = generator_set(n_);
        const Poly t = Poly::var(VarId::param());
        for (const auto& m : gens.members) {
            Poly f = m.poly;
            if (tampered(m.index)) f += Poly::var(VarId::entry(1, 1, n_));
            std::string failure;
            for (int a = 1; a <= n_ && failure.empty(); ++a) {
                for (int b = a + 1; b <= n_ && failure.empty(); ++b) {
                    const Poly diff = rho(elementary_unipotent(n_, a, b, t), f, n_) - f;
                    if (!diff.is_zero()) {
                        failure = "u = E + t*e[" + std::to_string(a) + "][" + std::to_string(b) +
                                  "]: rho(u) f - f = " + to_text(diff);
                    }
                }
            }
            add("symbolic-invariance", gen_name(m.index), failure.empty() ? VerdictStatus::Pass : VerdictStatus::Fail,
                failure.empty() ? "all elementary unipotents" : failure);
        }
    }

    void fast_path_agreement() {
        const GenSet gens = generator_set(n_);
        Sampler sampler(derive_seed(cfg_.seed, 1000));
        bool ok = true;
        for (int trial = 0; trial < 5 && ok; ++trial) {
            const RatMatrix a = sampler.matrix(n_);
            ok = invariant_fingerprint(a) == symbolic_fingerprint(gens, a);
        }
        add("fast-path", "fingerprint", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
            ok ? "numeric and symbolic evaluation agree at 5 points" : "numeric and symbolic evaluation differ");
    }

    void triangular_structure() {
        for (const GenIndex idx : slice_order(n_)) {
            try {
                const TriDecomp d = tri_decompose(idx.k, idx.i, n_);
                add("triangular", gen_name(idx), VerdictStatus::Pass, "phi = " + to_text(d.phi));
            } catch (const StructureViolation& e) {
                add("triangular", gen_name(idx), VerdictStatus::Fail, e.what());
            }
        }
    }

    void block_formula() {
        for (const GenIndex idx : all_indices(n_)) {
            const BlockCheck check = block_formula_check(idx, n_);
            const bool ok = check.c_is_monomial && check.matches;
            std::string detail = "det C = " + to_text(check.det_c);
            if (!check.c_is_monomial) detail += " (not a monomial in the anti-diagonal coordinates)";
            if (!check.matches) detail += " (block product differs from the restriction)";
            add("block-formula", gen_name(idx), ok ? VerdictStatus::Pass : VerdictStatus::Fail, std::move(detail));
        }
    }

    void triangularity() {
        if (n_ <= 4) report_triangularity(slice_triangularity_check(n_, cfg_.seed, CheckMode::Symbolic));
        report_triangularity(slice_triangularity_check(n_, cfg_.seed, CheckMode::Numeric));
    }

    void report_triangularity(const TriangularityVerdict& v) {
        const std::string mode = v.mode == CheckMode::Symbolic ? "symbolic" : "numeric";
        add("slice-jacobian", mode, v.status,
            (v.status == VerdictStatus::Pass
                 ? "lower triangular, " + std::to_string(v.diagonal.size()) + " nonzero diagonal entries"
                 : v.failure) +
                ", " + std::to_string(v.attempts) + " attempt(s)");
    }

    void independence() {
        const auto v = independence_check(n_, cfg_.seed);
        add("independence", "jacobian", v.status,
            "rank " + std::to_string(v.rank) + (v.rank == v.expected ? " = " : " != ") + std::to_string(v.expected) +
                " expected, " + std::to_string(v.attempts) + " attempt(s)");
    }

    const Config& cfg_;
    int n_;
    std::vector<CheckResult> results_;
};

std::pair<std::string, bool> cmd_verify(const Config& cfg) {
    check_guard(cfg, kVerifyGuard, "verify");
    if (cfg.trials < 1) throw GuardViolation("verify: --trials must be >= 1");
    const auto results = VerifyRun(cfg).run();
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.status == VerdictStatus::Pass ? 0 : 1;

    if (cfg.format == "json") {
        Json checks = Json::array();
        for (const auto& r : results) {
            checks.push_back(Json{{"suite", r.suite},
                                  {"target", r.target},
                                  {"status", to_string(r.status)},
                                  {"detail", r.detail}});
        }
        Json report{{"n", cfg.n},          {"seed", cfg.seed},   {"trials", cfg.trials},
                    {"passed", failed == 0}, {"failed", failed}, {"checks", std::move(checks)}};
        return {report.dump(2) + "\n", failed == 0};
    }
    std::ostringstream os;
    os << "verify n=" << cfg.n << " seed=" << cfg.seed << " trials=" << cfg.trials << "\n";
    for (const auto& r : results) {
        std::string label = to_string(r.status);
        std::transform(label.begin(), label.end(), label.begin(), [](unsigned char c) { return std::toupper(c); });
        os << label << " " << r.suite << " " << r.target << ": " << r.detail
           << "\n";
    }
    if (failed == 0) {
        os << "all " << results.size() << " checks passed\n";
    } else {
        os << failed << " of " << results.size() << " checks failed\n";
    }
    return {os.str(), failed == 0};
}

// ---------------------------------------------------------------------------
// canon / classify

std::string cmd_canon(const Config& cfg) {
    const auto matrices = io::read_matrices(io::read_file(cfg.input));
    if (matrices.size() != 1) throw ParseError("canon expects exactly one matrix");
    const RatMatrix& a = matrices.front();
    Config sized = cfg;
    sized.n = static_cast<int>(a.rows());
    check_guard(sized, kNumericGuard, "canon");

    const SlicePoint point = canonicalize(a);
    const Fingerprint fp = invariant_fingerprint(a);
    if (cfg.format == "text") {
        std::ostringstream os;
        os << "fingerprint:\n";
        for (const GenIndex idx : all_indices(fp.n)) os << "  " << gen_name(idx) << " = " << fp.at(idx) << "\n";
        os << "canonical:\n";
        for (const GenIndex idx : all_indices(point.n)) {
            os << "  s[" << idx.k << "][" << idx.i << "] = " << point.at(idx) << "\n";
        }
        os << "matrix: " << matrix_text(point.matrix()) << "\n";
        return os.str();
    }
    Json out{{"fingerprint", io::fingerprint_to_json(fp)},
             {"canonical", io::slice_point_to_json(point)},
             {"matrix", io::matrix_to_json(point.matrix())}};
    return out.dump(2) + "\n";
}

class MixedSizes : public Error {
public:
    using Error::Error;
};

std::string cmd_classify(const Config& cfg) {
    const auto matrices = io::read_matrices(io::read_file(cfg.input));
    for (const auto& m : matrices) {
        if (m.rows() != matrices.front().rows()) throw MixedSizes("classify: matrices of different sizes");
    }
    if (!matrices.empty()) {
        Config sized = cfg;
        sized.n = static_cast<int>(matrices.front().rows());
        check_guard(sized, kNumericGuard, "classify");
    }

    struct OrbitClass {
        SlicePoint canonical;
        std::vector<std::size_t> members;
    };
    std::vector<OrbitClass> classes;
    std::map<std::vector<Rational>, std::size_t> by_point;
    // Omega matrices whose invariants do not pin down a slice point; grouped
    // by solving for a conjugating unipotent against each group's first member.
    std::vector<std::vector<std::size_t>> nongeneric;
    std::vector<std::pair<std::size_t, int>> unclassified;
    for (std::size_t j = 0; j < matrices.size(); ++j) {
        if (const auto k = first_vanishing_corner(matrices[j])) {
            unclassified.emplace_back(j, *k);
            continue;
        }
        try {
            SlicePoint point = canonicalize(matrices[j]);
            const auto [it, inserted] = by_point.try_emplace(point.coords, classes.size());
            if (inserted) classes.push_back({std::move(point), {}});
            classes[it->second].members.push_back(j);
        } catch (const DegenerateInput&) {
            auto group = std::find_if(nongeneric.begin(), nongeneric.end(), [&](const auto& g) {
                return conjugating_unipotent(matrices[g.front()], matrices[j]).has_value();
            });
            if (group == nongeneric.end()) {
                nongeneric.push_back({j});
            } else {
                group->push_back(j);
            }
        }
    }

    if (cfg.format == "text") {
        std::ostringstream os;
        os << classes.size() << " class(es), " << nongeneric.size() << " non-generic class(es), "
           << unclassified.size() << " unclassified\n";
        for (std::size_t c = 0; c < classes.size(); ++c) {
            os << "class " << c << ": members";
            for (const auto m : classes[c].members) os << " " << m;
            os << "; canonical " << matrix_text(classes[c].canonical.matrix()) << "\n";
        }
        for (std::size_t c = 0; c < nongeneric.size(); ++c) {
            os << "non-generic class " << c << ": members";
            for (const auto m : nongeneric[c]) os << " " << m;
            os << "\n";
        }
        for (const auto& [index, k] : unclassified) os << "unclassified " << index << ": J_" << k << " = 0\n";
        return os.str();
    }
    Json class_list = Json::array();
    for (const auto& c : classes) {
        class_list.push_back(Json{{"canonical", io::slice_point_to_json(c.canonical)}, {"members", c.members}});
    }
    Json nongeneric_list = Json::array();
    for (const auto& g : nongeneric) nongeneric_list.push_back(Json{{"members", g}});
    Json rest = Json::array();
    for (const auto& [index, k] : unclassified) rest.push_back(Json{{"index", index}, {"first_vanishing_minor", k}});
    Json out{{"classes", std::move(class_list)},
             {"nongeneric_classes", std::move(nongeneric_list)},
             {"unclassified", std::move(rest)}};
    return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// bench

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string cmd_bench(const Config& cfg) {
    check_guard(cfg, kBenchGuard, "bench");
    constexpr int kSamples = 20;
    Json rows = Json::array();
    std::ostringstream os;
    os << "n  det(X) terms  symbolic_ms  cofactor_ms  bareiss_ms  agree\n";
    for (int n = 1; n <= cfg.n; ++n) {
        auto start = std::chrono::steady_clock::now();
        const Poly sym = det_cofactor(build_X(n));
        const double symbolic = seconds_since(start);

        Sampler sampler(derive_seed(cfg.seed, static_cast<std::uint64_t>(n)));
        std::vector<RatMatrix> samples;
        for (int j = 0; j < kSamples; ++j) samples.push_back(sampler.matrix(n));
        std::vector<Rational> by_cofactor;
        std::vector<Rational> by_bareiss;
        start = std::chrono::steady_clock::now();
        for (const auto& m : samples) by_cofactor.push_back(det_cofactor(m));
        const double cofactor = seconds_since(start);
        start = std::chrono::steady_clock::now();
        for (const auto& m : samples) by_bareiss.push_back(det_bareiss(m));
        const double bareiss = seconds_since(start);
        const bool agree = by_cofactor == by_bareiss;

        rows.push_back(Json{{"n", n},
                            {"det_terms", sym.term_count()},
                            {"symbolic_ms", symbolic * 1e3},
                            {"cofactor_ms", cofactor * 1e3},
                            {"bareiss_ms", bareiss * 1e3},
                            {"samples", kSamples},
                            {"agree", agree}});
        char line[128];
        std::snprintf(line, sizeof line, "%-2d %13zu %12.3f %12.3f %11.3f  %s\n", n, sym.term_count(),
                      symbolic * 1e3, cofactor * 1e3, bareiss * 1e3, agree ? "yes" : "NO");
        os << line;
    }
    if (cfg.format == "json") return rows.dump(2) + "\n";
    return os.str();
}

// ---------------------------------------------------------------------------

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw Error("cannot write " + cfg.out_path);
    file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact U-invariants of the adjoint action: generators, verification, canonical forms", "uinv"};
    app.require_subcommand(1);
    Config cfg;

    auto* gen = app.add_subcommand("gen", "Emit the generators J[k][i] and their restrictions to the slice");
    gen->add_option("--n", cfg.n, "Board size")->required();
    std::string gen_format = "json";
    gen->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"text", "json"}));
    gen->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    gen->add_flag("--force", cfg.force, "Override the size guard");

    auto* verify = app.add_subcommand("verify", "Run the invariance, triangularity and independence checks");
    verify->add_option("--n", cfg.n, "Board size")->required();
    verify->add_option("--seed", cfg.seed, "Master seed");
    verify->add_option("--trials", cfg.trials, "Random trials per generator");
    std::string verify_format = "text";
    verify->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    verify->add_flag("--force", cfg.force, "Override the size guard");
    verify->add_flag("--tamper", cfg.tamper, "Test mode: replace J[2][1] by J[2][1] + x[1][1]")->group("");

    auto* canon = app.add_subcommand("canon", "Fingerprint and canonical slice point of a matrix");
    canon->add_option("input", cfg.input, "Matrix file (JSON or CSV), '-' for stdin")->required();
    std::string canon_format = "json";
    canon->add_option("--format", canon_format, "Output format")->check(CLI::IsMember({"text", "json"}));
    canon->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    canon->add_flag("--force", cfg.force, "Override the size guard");

    auto* classify = app.add_subcommand("classify", "Group matrices by U-orbit");
    classify->add_option("input", cfg.input, "File with matrices (JSON or CSV), '-' for stdin")->required();
    std::string classify_format = "json";
    classify->add_option("--format", classify_format, "Output format")->check(CLI::IsMember({"text", "json"}));
    classify->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    classify->add_flag("--force", cfg.force, "Override the size guard");

    auto* bench = app.add_subcommand("bench", "Time cofactor and fraction-free determinants");
    bench->add_option("--n", cfg.n, "Largest board size")->default_val(6);
    bench->add_option("--seed", cfg.seed, "Seed for the random matrices");
    std::string bench_format = "text";
    bench->add_option("--format", bench_format, "Output format")->check(CLI::IsMember({"text", "json"}));
    bench->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    bench->add_flag("--force", cfg.force, "Override the size guard");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return e.get_exit_code();
    }

    try {
        if (gen->parsed()) {
            cfg.format = gen_format;
            emit(cfg, cmd_gen(cfg), out);
        } else if (verify->parsed()) {
            cfg.format = verify_format;
            const auto [report, passed] = cmd_verify(cfg);
            emit(cfg, report, out);
            return passed ? kOk : kCheckFailed;
        } else if (canon->parsed()) {
            cfg.format = canon_format;
            emit(cfg, cmd_canon(cfg), out);
        } else if (classify->parsed()) {
            cfg.format = classify_format;
            emit(cfg, cmd_classify(cfg), out);
        } else if (bench->parsed()) {
            cfg.format = bench_format;
            emit(cfg, cmd_bench(cfg), out);
        }
    } catch (const GuardViolation& e) {
        err << e.what() << "\n";
        return kGuard;
    } catch (const NotInOmega& e) {
        err << "not in Omega: " << e.what() << "\n";
        return kNotInOmega;
    } catch (const MixedSizes& e) {
        err << e.what() << "\n";
        return kMixedSizes;
    } catch (const DegenerateInput& e) {
        err << e.what() << "\n";
        return kNonGeneric;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kOk;
}

}  // namespace uinv::cli
