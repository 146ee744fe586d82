// Acceptance gate: one PASS/FAIL line per criterion, each under a pinned
// wall-clock limit. Exit status is non-zero if any criterion fails.
//
// All comparisons are exact rational equalities; there are no tolerances.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <ballkrall/bases.hpp>
#include <ballkrall/harmonics.hpp>
#include <ballkrall/jacobi.hpp>
#include <ballkrall/measures.hpp>
#include <ballkrall/operators.hpp>
#include <ballkrall/verify.hpp>

#include "jacobi_oracles.hpp"
#include "moment_oracles.hpp"
#include "random_poly.hpp"

using namespace ballkrall;
namespace oracle = ballkrall::testing::oracle;
namespace bk_test = ballkrall::testing;

namespace {

// Counts checks and keeps the first few failure descriptions.
class Tally {
  public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            ++failures_;
            if (messages_.size() < 5) messages_.push_back(what);
        }
    }
    void zero(const MultiPoly& p, const std::string& what) {
        expect(p.is_zero(), what + ": residual " + p.str());
    }
    void zero(const UniPoly& p, const std::string& what) {
        expect(p.is_zero(), what + ": residual " + p.str());
    }
    void equal(const Rational& a, const Rational& b, const std::string& what) {
        expect(a == b, what + ": " + to_string(a) + " != " + to_string(b));
    }
    long checks() const { return checks_; }
    long failures() const { return failures_; }
    const std::vector<std::string>& messages() const { return messages_; }

  private:
    long checks_ = 0;
    long failures_ = 0;
    std::vector<std::string> messages_;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Tally&)> body;
};

std::string where(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) out += (out.empty() ? "" : " ") + std::string(k) + "=" + v;
    return out;
}

std::string s(const Rational& r) { return to_string(r); }
std::string s(long v) { return std::to_string(v); }

const std::vector<Rational> kJacobiGrid{0, rat(1, 2), 1, rat(3, 2), 2};

// ------------------------------------------------------------------ 1
void jacobi_layer(Tally& t) {
    for (const auto& a : kJacobiGrid)
        for (const auto& b : kJacobiGrid)
            for (long n = 0; n <= 10; ++n) {
                const std::string at = where({{"n", s(n)}, {"a", s(a)}, {"b", s(b)}});
                const UniPoly P = jacobi_poly(n, {a, b});
                t.equal(P(1), pochhammer(a + 1, n) / factorial(n), "P_n(1) " + at);
                t.expect(P == oracle::jacobi_hypergeometric(n, a, b), "hypergeometric oracle " + at);
                if (n >= 1) t.zero(jacobi_derivative_identity_check(n, {a, b}), "derivative " + at);
                t.zero(jacobi_ode_residual(n, {a, b}), "ODE " + at);
            }
}

// ------------------------------------------------------------------ 2
void krall_polynomials(Tally& t) {
    for (long d : {2L, 3L})
        for (const auto& lambda : {rat(1, 4), rat(1, 2), rat(1)})
            for (const auto& beta : {rat(0), rat(1, 2), rat(1), rat(3, 2), rat(2)}) {
                const auto p = KrallParams::from_lambda(0, beta, lambda, d);
                const std::string at = where({{"d", s(d)}, {"lambda", s(lambda)}, {"beta", s(beta)}});
                std::vector<UniPoly> q;
                for (long k = 0; k <= 6; ++k) q.push_back(krall_q(k, p));
                // With alpha = 0 the Gamma ratio telescopes to d/2.
                const Rational closed = Rational(d, 2) / lambda;
                for (long k = 0; k <= 6; ++k) {
                    t.equal(q[k](1), closed, "q_k(1) " + at + " k=" + s(k));
                    t.equal(krall_q_at_one(k, p), closed, "q_k(1) closed form " + at);
                    for (long j = 0; j < k; ++j) {
                        t.equal(uni_inner_jacobi_mass(q[j], q[k], p), 0,
                                "(q_j,q_k) " + at + " j=" + s(j) + " k=" + s(k));
                        if (is_integer(beta)) {
                            // Same product with the Jacobi part integrated directly.
                            const long b = static_cast<long>(as_nonnegative_int(beta));
                            t.equal(Rational(d, 2) * oracle::direct_half_integral(q[j] * q[k], b) +
                                        lambda * q[j](1) * q[k](1),
                                    0, "(q_j,q_k) direct " + at);
                        }
                    }
                }
                const auto gs = oracle::gram_schmidt(6, [&](const UniPoly& f, const UniPoly& g) {
                    return uni_inner_jacobi_mass(f, g, p);
                });
                for (long k = 0; k <= 6; ++k)
                    t.expect(oracle::monic(q[k]) == gs[k], "Gram-Schmidt oracle " + at + " k=" + s(k));
            }
}

// ------------------------------------------------------------------ 3
void krall_operators(Tally& t) {
    for (const auto& beta : {rat(0), rat(1), rat(2), rat(5, 2)})
        for (const auto& M : {rat(1), rat(2), rat(7, 3)})
            for (long k = 0; k <= 8; ++k) {
                const std::string at = where({{"beta", s(beta)}, {"M", s(M)}, {"k", s(k)}});
                const UniPoly P = jacobi_poly(k, {0, beta});
                const UniPoly q = krall_q_M(k, beta, M);
                const Rational ev = (M + k * (k + beta)) * (M + (k + 1) * (k + beta + 1));
                t.zero(apply_L1(P, beta, M) - q, "L1 P = q " + at);
                t.zero(apply_L2(q, beta, M) - P * ev, "L2 q = ev P " + at);
                t.zero(apply_L1(apply_L2(q, beta, M), beta, M) - q * ev, "L1 L2 q = ev q " + at);
            }
    std::mt19937 rng(8128);
    for (long beta = 0; beta <= 3; ++beta)
        for (const auto& M : {rat(1), rat(2), rat(7, 3)})
            for (int trial = 0; trial < 10; ++trial) {
                const UniPoly f = bk_test::random_unipoly(rng, 5);
                const UniPoly g = bk_test::random_unipoly(rng, 5);
                const std::string at = where({{"beta", s(beta)}, {"M", s(M)}});
                t.equal(ibp_identity_residual(f, g, beta, M), 0, "integration by parts " + at);
                const UniPoly l1f = apply_L1(f, beta, M);
                t.equal(oracle::direct_half_integral(g * l1f, beta) + g(1) * l1f(1) / M,
                        oracle::direct_half_integral(f * apply_L2(g, beta, M), beta),
                        "integration by parts, direct integrals " + at);
            }
}

// ------------------------------------------------------------------ 4
void harmonics(Tally& t) {
    std::mt19937 rng(4);
    for (std::size_t d = 2; d <= 4; ++d)
        for (unsigned m = 0; m <= 8; ++m) {
            const std::string at = where({{"d", s(static_cast<long>(d))}, {"m", s(m)}});
            const auto hb = harmonic_basis(d, m);
            // Hilbert series (1+t)/(1-t)^{d-1}.
            auto c = [d](long j) { return j < 0 ? 0 : binom(j + static_cast<long>(d) - 2, static_cast<long>(d) - 2); };
            t.expect(static_cast<long>(hb.elements.size()) == c(m) + c(static_cast<long>(m) - 1),
                     "harmonic count " + at);
            for (std::size_t i = 0; i < hb.elements.size(); ++i) {
                const auto& y = hb.elements[i];
                t.zero(laplacian(y), "Delta Y " + at);
                t.zero(euler_residual(y, m), "Euler " + at);
                t.zero(laplace_beltrami_residual(y, m), "Laplace-Beltrami " + at);
                for (std::size_t j = 0; j < i; ++j)
                    t.equal(inner_sphere(y, hb.elements[j], d), 0, "sphere product " + at);
            }
            for (int trial = 0; trial < 3; ++trial) {
                MultiPoly f(d);
                for (const auto& mono : monomials_of_degree(d, m))
                    f.add_term(mono, bk_test::random_rational(rng));
                t.zero(polar_decomposition_residual(f, m), "polar Laplacian " + at);
            }
        }
}

// ------------------------------------------------------------------ 5
void moments(Tally& t) {
    for (std::size_t d = 2; d <= 4; ++d)
        for (unsigned total = 0; total <= 6; ++total)
            for (const auto& nu : monomials_of_degree(d, total)) {
                Rational sum = 0;
                for (std::size_t i = 0; i < d; ++i) sum += sphere_moment(nu * Monomial::unit(d, i, 2));
                t.equal(sum, sphere_moment(nu), "sphere consistency " + MultiPoly::term(nu, 1).str());
            }
    for (unsigned alpha = 0; alpha <= 2; ++alpha)
        for (unsigned a = 0; a <= 8; ++a)
            for (unsigned b = 0; a + b <= 8; ++b) {
                t.equal(ball_moment(Monomial{a, b}, {2, Rational(alpha) + rat(1, 2), 0}),
                        bk_test::disk_ball_moment_oracle(a, b, alpha),
                        "Cartesian disk oracle " + where({{"alpha", s(alpha)}, {"a", s(a)}, {"b", s(b)}}));
                t.equal(sphere_moment(Monomial{a, b}), bk_test::circle_moment_wallis(a, b),
                        "Wallis oracle");
            }
    for (std::size_t d = 2; d <= 6; ++d)
        t.equal(sigma_over_omega({d, rat(1, 2), 0}), static_cast<long>(d),
                "sigma/omega d=" + s(static_cast<long>(d)));
}

// ------------------------------------------------------------------ 6
void classical_bases(Tally& t) {
    for (std::size_t d = 2; d <= 3; ++d)
        for (const auto& mu : {rat(1, 2), rat(1), rat(3, 2)}) {
            const MeasureParams mp{d, mu, 0};
            const OperatorParams op{d, mu, 1};
            HarmonicCache cache;
            std::vector<BallBasisElement> all;
            for (unsigned n = 0; n <= 6; ++n) {
                const auto P = classical_basis(n, mp, cache);
                t.expect(static_cast<long>(P.size()) == orthogonal_space_dimension(static_cast<long>(d), n),
                         "dimension n=" + s(n));
                const Rational ev = -Rational(static_cast<long>(n + d)) * (n + 2 * mu - 1);
                for (const auto& e : P) t.zero(apply_D_mu(e.poly, op) - e.poly * ev,
                                               "D_mu " + where({{"d", s(static_cast<long>(d))}, {"mu", s(mu)}, {"n", s(n)}}));
                all.insert(all.end(), P.begin(), P.end());
            }
            // One Gram matrix over every degree: diagonal within and across degrees.
            const auto g = gram_matrix(all, mp, ProductKind::classical);
            t.expect(is_diagonal_positive(g),
                     "classical Gram " + where({{"d", s(static_cast<long>(d))}, {"mu", s(mu)}}));
        }
}

// ------------------------------------------------------------------ 7
void lambda_bases(Tally& t) {
    for (std::size_t d = 2; d <= 3; ++d)
        for (const auto& lambda : {rat(1, 4), rat(1, 2)}) {
            const MeasureParams mp{d, rat(1, 2), lambda};
            const std::string at = where({{"d", s(static_cast<long>(d))}, {"lambda", s(lambda)}});
            HarmonicCache cache;
            std::vector<BallBasisElement> all;
            for (unsigned n = 0; n <= 4; ++n) {
                const auto Q = lambda_basis(n, mp, cache);
                all.insert(all.end(), Q.begin(), Q.end());
            }
            const auto g = gram_matrix(all, mp, ProductKind::lambda);
            t.expect(is_diagonal_positive(g), "lambda Gram " + at);
            if (d != 2) continue;
            // Polar split of the product, with the harmonics' own sphere norm in
            // place of orthonormality: I1 = (sigma/omega) 2^{-beta-2} int q_j q_k (1+t)^beta,
            // I2 = lambda q_j(1) q_k(1).
            const Rational sigma_omega = sigma_over_omega(mp);
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = 0; j < all.size(); ++j) {
                    const auto& a = all[i];
                    const auto& b = all[j];
                    if (!is_integer(a.index.beta_k) ||
                        static_cast<long>(as_nonnegative_int(a.index.beta_k)) % 2 != 0)
                        continue;
                    const bool same_harmonic = a.index.harmonic_degree() == b.index.harmonic_degree() &&
                                               a.index.nu == b.index.nu;
                    Rational expected = 0;
                    if (same_harmonic) {
                        const long beta = static_cast<long>(as_nonnegative_int(a.index.beta_k));
                        // 2^{-beta-2} int = (1/2) 2^{-beta-1} int.
                        const Rational I1 = sigma_omega / 2 *
                                            oracle::direct_half_integral(a.radial * b.radial, beta);
                        const Rational I2 = lambda * a.radial(1) * b.radial(1);
                        expected = a.harmonic_sq_norm * (I1 + I2);
                    }
                    t.equal(g[i][j], expected, "factorization " + at);
                }
        }
}

// ------------------------------------------------------------------ 8
void fourth_order(Tally& t) {
    for (std::size_t d = 2; d <= 3; ++d)
        for (const auto& M : {rat(1), rat(2), rat(7, 3)}) {
            const OperatorParams op{d, rat(1, 2), M};
            const MeasureParams mp{d, rat(1, 2), op.lambda()};
            HarmonicCache cache;
            const unsigned top = d == 2 ? 6 : 5;
            for (unsigned n = 0; n <= top; ++n) {
                const auto P = classical_basis(n, mp, cache);
                const auto Q = lambda_basis(n, mp, cache);
                for (std::size_t i = 0; i < P.size(); ++i) {
                    const unsigned k = P[i].index.k;
                    const std::string at = where({{"d", s(static_cast<long>(d))}, {"M", s(M)},
                                                  {"n", s(n)}, {"k", s(k)}, {"nu", s(P[i].index.nu)}});
                    const Rational ev = lambda_eigenvalue(n, k, op).value;
                    t.zero(apply_A1(P[i].poly, op) - Q[i].poly, "A1 P = Q " + at);
                    t.zero(apply_A2(Q[i].poly, op) - P[i].poly * ev, "A2 Q = Lambda P " + at);
                    t.zero(fourth_order_residual(Q[i].poly, ev, op), "A1 A2 Q = Lambda Q " + at);
                }
            }
            for (unsigned n = 0; n <= 10; ++n)
                for (unsigned k = 0; 2 * k <= n; ++k)
                    t.equal(lambda_eigenvalue(n, k, op).value,
                            lambda_eigenvalue_beta_form(n, k, op).value, "Lambda forms");
        }
    const OperatorParams op{2, rat(1, 2), 2};
    const MultiPoly f = MultiPoly::term({2, 0}, 1);
    for (unsigned k = 0; k <= 1; ++k) {
        const MultiPoly residual = fourth_order_residual(f, lambda_eigenvalue(2, k, op).value, op);
        t.expect(!residual.is_zero(), "negative control vanished");
        if (k == 0)
            std::cout << "      negative control: A1 A2 x1^2 - Lambda_{2,0} x1^2 = " << residual.str()
                      << "\n";
    }
}

// ------------------------------------------------------------------ 9
std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args, const std::filesystem::path& out) {
    const std::string cmd = std::string("\"") + BALLVERIFY_EXE + "\" " + args + " > \"" + out.string() +
                            "\" 2> /dev/null";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

void cli(Tally& t) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ballkrall_acceptance";
    fs::create_directories(dir);
    const std::string args = "run --dim 2 --mu 1/2 --lambda 1/4 --max-degree 4 --suites all";
    t.expect(run_cli(args, dir / "a.jsonl") == 0, "all suites exit 0");
    t.expect(run_cli(args, dir / "b.jsonl") == 0, "all suites exit 0 (second run)");
    const std::string a = slurp(dir / "a.jsonl");
    t.expect(!a.empty() && a == slurp(dir / "b.jsonl"), "report is byte-identical across runs");
    try {
        const Report r = parse_jsonl(a);
        t.expect(r.summary.failed == 0 && r.summary.total == r.records.size(), "summary line");
        t.expect(to_jsonl(r) == a, "report round-trips");
        for (const auto& rec : r.records)
            t.expect(rec.status == Status::exact_zero || rec.status == Status::exact_match,
                     "record " + rec.identity);
    } catch (const std::exception& e) {
        t.expect(false, std::string("report does not parse: ") + e.what());
    }
    t.expect(run_cli(args + " --corrupt-eigenvalue 1", dir / "c.jsonl") == 1, "corrupted run exits 1");
    try {
        const Report bad = parse_jsonl(slurp(dir / "c.jsonl"));
        bool witnessed = false;
        for (const auto& rec : bad.records)
            if (rec.status == Status::fail) {
                witnessed = witnessed || rec.witness.find("x1^") != std::string::npos;
                if (witnessed && rec.identity == "fourth-order") {
                    std::cout << "      corrupted witness: " << rec.witness << "\n";
                    break;
                }
            }
        t.expect(witnessed, "FAIL record carries a residual witness");
    } catch (const std::exception& e) {
        t.expect(false, std::string("corrupted report does not parse: ") + e.what());
    }
    fs::remove_all(dir);
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Jacobi normalization, derivative and ODE identities", 5, jacobi_layer},
        {2, "Krall polynomials: orthogonality, q_k(1), Gram-Schmidt oracle", 10, krall_polynomials},
        {3, "L1/L2 connection, fourth-order equation, integration by parts", 10, krall_operators},
        {4, "harmonic bases and the polar Laplacian", 30, harmonics},
        {5, "sphere and ball moments", 5, moments},
        {6, "classical ball basis and D_mu", 60, classical_bases},
        {7, "lambda-modified ball basis and its product split", 60, lambda_bases},
        {8, "A1/A2 connection and the fourth-order PDE", 120, fourth_order},
        {9, "ballverify CLI", 60, cli},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body(t);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = error.empty() && t.failures() == 0 && t.checks() > 0 && secs < c.limit_seconds;
        if (!ok) ++failed;
        std::printf("%s criterion %d: %s (%ld checks, %.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL",
                    c.id, c.title.c_str(), t.checks(), secs, c.limit_seconds);
        if (!error.empty()) std::printf("      exception: %s\n", error.c_str());
        for (const auto& m : t.messages()) std::printf("      %s\n", m.c_str());
        if (secs >= c.limit_seconds) std::printf("      over the time limit\n");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
