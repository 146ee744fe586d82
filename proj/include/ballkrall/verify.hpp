#ifndef BALLKRALL_VERIFY_HPP
#define BALLKRALL_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bases.hpp"
#include "harmonics.hpp"
#include "jacobi.hpp"
#include "measures.hpp"
#include "operators.hpp"

namespace ballkrall {

class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names = {
        "jacobi",         "krall1d",    "harmonics",  "moments",     "classical-orthogonality",
        "lambda-orthogonality", "d-mu-eigen", "connection", "fourth-order"};
    return names;
}

struct SuiteConfig {
    std::size_t dim = 2;
    Rational mu = Rational(1, 2);
    std::optional<Rational> lambda;
    std::optional<Rational> M;
    unsigned max_degree = 4;
    std::vector<std::string> suites = all_suites();
    std::uint64_t seed = 0;
    /// Test hook: added to every Lambda_{n,k} in the fourth-order suite.
    std::optional<Rational> corrupt_eigenvalue;
    bool timing = false;

    /// Checks the invariants and fills in whichever of lambda / M is missing.
    /// With neither given, lambda defaults to 1/2. Idempotent: a pair that
    /// already satisfies M = d/(2 lambda) is accepted.
    void resolve() {
        if (dim < 2) throw ConfigError("--dim must be at least 2");
        if (mu <= Rational(-1, 2)) throw ConfigError("--mu must exceed -1/2");
        const Rational d(static_cast<long>(dim));
        if (lambda && M) {
            if (*lambda <= 0 || *M != d / (2 * *lambda))
                throw ConfigError("give exactly one of --lambda and --M");
        } else if (M) {
            if (*M <= 0) throw ConfigError("--M must be positive");
            lambda = d / (2 * *M);
        } else {
            if (!lambda) lambda = Rational(1, 2);
            if (*lambda <= 0) throw ConfigError("--lambda must be positive");
            M = d / (2 * *lambda);
        }
        for (const auto& s : suites)
            if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
                throw ConfigError("unknown suite '" + s + "'");
    }

    MeasureParams measure() const { return {dim, mu, *lambda}; }
    OperatorParams operators() const { return {dim, mu, *M}; }
    bool wants(const std::string& suite) const {
        return std::find(suites.begin(), suites.end(), suite) != suites.end();
    }
};

/// "all" or a comma list.
inline std::vector<std::string> parse_suite_list(const std::string& text) {
    if (text == "all") return all_suites();
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    if (out.empty()) throw ConfigError("empty --suites list");
    return out;
}

enum class Status { exact_zero, exact_match, fail, skipped_unsupported };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::exact_zero: return "exact-zero";
        case Status::exact_match: return "exact-match";
        case Status::fail: return "FAIL";
        case Status::skipped_unsupported: return "skipped: unsupported-exact";
    }
    return "?";
}

inline Status parse_status(const std::string& s) {
    for (Status v : {Status::exact_zero, Status::exact_match, Status::fail,
                     Status::skipped_unsupported})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown status '" + s + "'");
}

struct Record {
    std::string suite;
    std::string identity;
    std::string anchor;
    std::map<std::string, std::string> parameters;
    Status status = Status::exact_zero;
    /// Serialized residual; always set on FAIL, and on negative controls.
    std::string witness;
    std::optional<double> elapsed_ms;

    bool operator==(const Record&) const = default;
};

struct Summary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::map<std::string, std::string> config;

    bool operator==(const Summary&) const = default;
};

struct Report {
    std::vector<Record> records;
    Summary summary;

    bool all_passed() const { return summary.failed == 0; }
    bool operator==(const Report&) const = default;

    void finalize(const std::map<std::string, std::string>& config) {
        summary = {};
        summary.config = config;
        for (const auto& r : records) {
            ++summary.total;
            if (r.status == Status::fail) ++summary.failed;
            else if (r.status == Status::skipped_unsupported) ++summary.skipped;
            else ++summary.passed;
        }
    }
};

inline nlohmann::json to_json(const Record& r) {
    nlohmann::json j = {{"suite", r.suite},           {"identity", r.identity},
                        {"anchor", r.anchor},         {"parameters", r.parameters},
                        {"status", to_string(r.status)}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    return j;
}

inline nlohmann::json to_json(const Summary& s) {
    return {{"summary",
             {{"total", s.total},
              {"passed", s.passed},
              {"failed", s.failed},
              {"skipped", s.skipped},
              {"config", s.config}}}};
}

/// One record per line, then the summary line.
inline std::string to_jsonl(const Report& report) {
    std::string out;
    for (const auto& r : report.records) out += to_json(r).dump() + "\n";
    out += to_json(report.summary).dump() + "\n";
    return out;
}

inline Report parse_jsonl(const std::string& text) {
    Report report;
    std::stringstream in(text);
    std::string line;
    bool have_summary = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        if (j.contains("summary")) {
            const auto& s = j.at("summary");
            report.summary.total = s.at("total");
            report.summary.passed = s.at("passed");
            report.summary.failed = s.at("failed");
            report.summary.skipped = s.at("skipped");
            report.summary.config = s.at("config").get<std::map<std::string, std::string>>();
            have_summary = true;
            continue;
        }
        Record r;
        r.suite = j.at("suite");
        r.identity = j.at("identity");
        r.anchor = j.at("anchor");
        r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
        r.status = parse_status(j.at("status"));
        if (j.contains("witness")) r.witness = j.at("witness");
        if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
        report.records.push_back(std::move(r));
    }
    if (!have_summary) throw std::invalid_argument("report has no summary line");
    return report;
}

namespace detail {

using Params = std::map<std::string, std::string>;

inline std::string num(long v) { return std::to_string(v); }

/// Appends records for one suite and timestamps them when asked.
class Recorder {
  public:
    Recorder(Report& report, std::string suite, bool timing)
        : report_(report), suite_(std::move(suite)), timing_(timing),
          last_(std::chrono::steady_clock::now()) {}

    void zero(const std::string& identity, const std::string& anchor, Params params,
              const MultiPoly& residual) {
        push(identity, anchor, std::move(params),
             residual.is_zero() ? Status::exact_zero : Status::fail,
             residual.is_zero() ? "" : residual.str());
    }
    void zero(const std::string& identity, const std::string& anchor, Params params,
              const UniPoly& residual) {
        push(identity, anchor, std::move(params),
             residual.is_zero() ? Status::exact_zero : Status::fail,
             residual.is_zero() ? "" : residual.str());
    }
    void zero(const std::string& identity, const std::string& anchor, Params params,
              const LaurentPoly& residual) {
        push(identity, anchor, std::move(params),
             residual.is_zero() ? Status::exact_zero : Status::fail,
             residual.is_zero() ? "" : residual.str());
    }
    void zero(const std::string& identity, const std::string& anchor, Params params,
              const Rational& residual) {
        push(identity, anchor, std::move(params),
             residual == 0 ? Status::exact_zero : Status::fail,
             residual == 0 ? "" : to_string(residual));
    }
    void match(const std::string& identity, const std::string& anchor, Params params,
               const Rational& expected, const Rational& actual) {
        const bool ok = expected == actual;
        push(identity, anchor, std::move(params), ok ? Status::exact_match : Status::fail,
             ok ? "" : "expected " + to_string(expected) + " got " + to_string(actual));
    }
    void truth(const std::string& identity, const std::string& anchor, Params params, bool ok,
               const std::string& why) {
        push(identity, anchor, std::move(params), ok ? Status::exact_match : Status::fail,
             ok ? "" : why);
    }
    void skip(const std::string& identity, const std::string& anchor, Params params,
              const std::string& reason) {
        push(identity, anchor, std::move(params), Status::skipped_unsupported, reason);
    }
    void push(const std::string& identity, const std::string& anchor, Params params,
              Status status, std::string witness) {
        Record r{suite_, identity, anchor, std::move(params), status, std::move(witness), {}};
        if (timing_) {
            const auto now = std::chrono::steady_clock::now();
            r.elapsed_ms = std::chrono::duration<double, std::milli>(now - last_).count();
            last_ = now;
        }
        report_.records.push_back(std::move(r));
    }

  private:
    Report& report_;
    std::string suite_;
    bool timing_;
    std::chrono::steady_clock::time_point last_;
};

// Plain modular draws so that a seed gives the same polynomials on every
// standard library.
inline Rational draw_rational(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 5) + 1;
    return Rational(num, den);
}

inline UniPoly draw_unipoly(std::mt19937_64& rng, unsigned degree) {
    std::vector<Rational> c(degree + 1);
    for (auto& v : c) v = draw_rational(rng);
    return UniPoly(std::move(c));
}

inline MultiPoly draw_homogeneous(std::mt19937_64& rng, std::size_t dim, unsigned m) {
    MultiPoly out(dim);
    for (const auto& mono : monomials_of_degree(dim, m)) out.add_term(mono, draw_rational(rng));
    return out;
}

/// beta values met by the ball bases up to degree n_max, without repeats.
inline std::vector<Rational> ball_betas(const SuiteConfig& c) {
    std::vector<Rational> out;
    for (unsigned m = 0; m <= c.max_degree; ++m) out.push_back(beta_k(m, 0, c.dim));
    return out;
}

inline Params base_params(const SuiteConfig& c) {
    return {{"d", num(static_cast<long>(c.dim))}, {"mu", to_string(c.mu)}};
}

inline Params with(Params p, std::initializer_list<std::pair<const std::string, std::string>> extra) {
    for (const auto& kv : extra) p[kv.first] = kv.second;
    return p;
}

// ---------------------------------------------------------------- suites

inline void suite_jacobi(const SuiteConfig& c, Recorder& rec) {
    const Rational alpha = c.mu - Rational(1, 2);
    for (const Rational& beta : ball_betas(c)) {
        const JacobiParams jp{alpha, beta};
        for (unsigned n = 0; n <= c.max_degree; ++n) {
            const Params p = {{"alpha", to_string(alpha)}, {"beta", to_string(beta)}, {"n", num(n)}};
            const UniPoly P = jacobi_poly(n, jp);
            rec.match("jacobi-normalization", "P_n^(a,b)(1) = (a+1)_n / n!", p,
                      pochhammer(alpha + 1, n) / factorial(n), P(1));
            if (n >= 1)
                rec.zero("jacobi-derivative", "d/dt P_n^(a,b) = (n+a+b+1)/2 P_{n-1}^(a+1,b+1)", p,
                         jacobi_derivative_identity_check(n, jp));
            rec.zero("jacobi-ode", "Jacobi second-order differential equation", p,
                     jacobi_ode_residual(n, jp));
            for (unsigned j = 0; j < n; ++j)
                rec.zero("jacobi-orthogonality",
                         "int P_j P_n (1-t)^a (1+t)^b dt = 0 for j != n",
                         with(p, {{"j", num(j)}}),
                         jacobi_inner_normalized(jacobi_poly(j, jp), P, jp));
        }
    }
}

inline void suite_krall1d(const SuiteConfig& c, Recorder& rec, std::mt19937_64& rng) {
    const Rational alpha = c.mu - Rational(1, 2);
    const long d = static_cast<long>(c.dim);
    const bool lebesgue = c.mu == Rational(1, 2);
    for (const Rational& beta : ball_betas(c)) {
        const Params bp = {{"alpha", to_string(alpha)}, {"beta", to_string(beta)},
                           {"lambda", to_string(*c.lambda)}, {"d", num(d)}};
        const KrallParams kp = KrallParams::from_lambda(alpha, beta, *c.lambda, d);
        std::vector<UniPoly> q;
        try {
            for (unsigned k = 0; k <= c.max_degree; ++k) q.push_back(krall_q(k, kp));
        } catch (const UnsupportedExact& e) {
            rec.skip("krall-orthogonality", "(q_j, q_k)^lambda_(a,b) = 0 for j != k", bp, e.what());
            continue;
        }
        for (unsigned k = 0; k <= c.max_degree; ++k) {
            const Params p = with(bp, {{"k", num(k)}});
            rec.match("krall-value-at-one", "q_k(1) = Gamma-ratio closed form / lambda", p,
                      krall_q_at_one(k, kp), q[k](1));
            for (unsigned j = 0; j < k; ++j)
                rec.zero("krall-orthogonality", "(q_j, q_k)^lambda_(a,b) = 0 for j != k",
                         with(p, {{"j", num(j)}}), uni_inner_jacobi_mass(q[j], q[k], kp));
        }
        if (!lebesgue) {
            rec.skip("krall-connection", "L1 P_k^(0,b) = q_k^(b,M)", bp,
                     "the second-order factors are stated for alpha = 0 only");
            continue;
        }
        const Rational& M = *c.M;
        const Params mp = with(bp, {{"M", to_string(M)}});
        for (unsigned k = 0; k <= c.max_degree; ++k) {
            const Params p = with(mp, {{"k", num(k)}});
            const UniPoly P = jacobi_poly(k, {0, beta});
            const UniPoly qM = krall_q_M(k, beta, M);
            const Rational ev = krall_eigenvalue(k, beta, M);
            rec.zero("krall-two-forms", "[a_k - (1+t)d/dt] P_k = [M - (1+t)d/dt + k(k+b+1)] P_k", p,
                     q[k] - qM);
            rec.zero("krall-L1", "L1 P_k^(0,b) = q_k^(b,M)", p, apply_L1(P, beta, M) - qM);
            rec.zero("krall-L2", "L2 q_k^(b,M) = (M+k(k+b))(M+(k+1)(k+b+1)) P_k^(0,b)", p,
                     apply_L2(qM, beta, M) - P * ev);
            rec.zero("krall-fourth-order", "L1 L2 q_k^(b,M) = (M+k(k+b))(M+(k+1)(k+b+1)) q_k^(b,M)",
                     p, apply_L1(apply_L2(qM, beta, M), beta, M) - qM * ev);
        }
        for (int trial = 0; trial < 3; ++trial) {
            const UniPoly f = draw_unipoly(rng, 5);
            const UniPoly g = draw_unipoly(rng, 5);
            rec.zero("krall-integration-by-parts",
                     "int g L1 f dmu_(b,M) = int f L2 g (1+t)^b dt", with(mp, {{"trial", num(trial)}}),
                     ibp_identity_residual(f, g, beta, M));
        }
    }
}

inline void suite_harmonics(const SuiteConfig& c, Recorder& rec, std::mt19937_64& rng) {
    const long d = static_cast<long>(c.dim);
    for (unsigned m = 0; m <= c.max_degree; ++m) {
        const Params p = {{"d", num(d)}, {"m", num(m)}};
        const auto hb = harmonic_basis(c.dim, m);
        rec.match("harmonic-dimension", "dim H_m^d = binom(m+d-1,d-1) - binom(m+d-3,d-1)", p,
                  Rational(harmonic_dimension(d, m)), Rational(static_cast<long>(hb.elements.size())));
        for (std::size_t v = 0; v < hb.elements.size(); ++v) {
            const auto& y = hb.elements[v];
            const Params pv = with(p, {{"nu", num(static_cast<long>(v + 1))}});
            rec.zero("harmonic-laplacian", "Delta Y = 0", pv, laplacian(y));
            rec.zero("harmonic-euler", "<x, grad> Y = m Y", pv, euler_residual(y, m));
            rec.zero("harmonic-laplace-beltrami", "Delta_0 Y = -m(m+d-2) Y", pv,
                     laplace_beltrami_residual(y, m));
            for (std::size_t w = 0; w < v; ++w)
                rec.zero("harmonic-sphere-orthogonality", "<Y_mu, Y_nu>_S = 0 for mu != nu",
                         with(pv, {{"other", num(static_cast<long>(w + 1))}}),
                         inner_sphere(y, hb.elements[w], c.dim));
        }
        rec.zero("polar-laplacian", "|x|^2 Delta f = Delta_0 f + m(m+d-2) f for homogeneous f", p,
                 polar_decomposition_residual(draw_homogeneous(rng, c.dim, m), m));
    }
}

inline void suite_moments(const SuiteConfig& c, Recorder& rec) {
    const MeasureParams mp = c.measure();
    const MeasureParams shifted{c.dim, c.mu + 1, 0};
    const MultiPoly one = MultiPoly::constant(c.dim, 1);
    const Rational shift_mass = inner_ball(one - MultiPoly::norm_squared(c.dim), one, mp);
    for (unsigned total = 0; total <= 2 * c.max_degree; total += 2)
        for (const auto& nu : monomials_of_degree(c.dim, total)) {
            const Params p = with(base_params(c), {{"nu", MultiPoly::term(nu, 1).str()}});
            Rational sphere_sum = 0, ball_sum = 0;
            for (std::size_t i = 0; i < c.dim; ++i) {
                const Monomial up = nu * Monomial::unit(c.dim, i, 2);
                sphere_sum += sphere_moment(up);
                ball_sum += ball_moment(up, mp);
            }
            rec.match("sphere-moment-consistency", "sum_i <xi^(nu+2e_i)>_S = <xi^nu>_S on |xi| = 1",
                      p, sphere_moment(nu), sphere_sum);
            rec.match("ball-weight-shift",
                      "<x^nu (1-|x|^2)>_mu = <1-|x|^2>_mu <x^nu>_(mu+1)", p,
                      shift_mass * ball_moment(nu, shifted), ball_moment(nu, mp) - ball_sum);
        }
    const Params p = base_params(c);
    try {
        const Rational ratio = sigma_over_omega(mp);
        if (c.mu == Rational(1, 2))
            rec.match("sphere-to-ball-ratio", "sigma_(d-1) / omega_(1/2) = d", p,
                      Rational(static_cast<long>(c.dim)), ratio);
        else
            rec.truth("sphere-to-ball-ratio", "sigma_(d-1) / omega_mu > 0", p, ratio > 0,
                      "non-positive ratio " + to_string(ratio));
    } catch (const UnsupportedExact& e) {
        rec.skip("sphere-to-ball-ratio", "sigma_(d-1) / omega_mu", p, e.what());
    }
}

inline void record_gram(Recorder& rec, const std::string& identity, const std::string& anchor,
                        const Params& p, const std::vector<BallBasisElement>& elements,
                        const RationalMatrix& g) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto& a = elements[i].index;
        const Params pi = with(p, {{"k", num(a.k)}, {"nu", num(a.nu)}});
        rec.truth(identity + "-norm", "squared norm is positive", pi,
                  g[i][i] > 0 && g[i][i] == elements[i].sq_norm,
                  "squared norm " + to_string(g[i][i]));
        for (std::size_t j = 0; j < i; ++j) {
            const auto& b = elements[j].index;
            rec.zero(identity, anchor,
                     with(pi, {{"k'", num(b.k)}, {"nu'", num(b.nu)}}), g[i][j]);
        }
    }
}

inline void record_lower_degrees(Recorder& rec, const std::string& identity, const Params& p,
                                 const std::vector<BallBasisElement>& elements, MomentTable& moments,
                                 ProductKind kind) {
    for (const auto& e : elements) {
        MultiPoly witness(e.poly.dim());
        for (long low = 0; low < static_cast<long>(e.index.n); ++low)
            for (const auto& mono : monomials_of_degree(e.poly.dim(), low)) {
                const MultiPoly x = MultiPoly::term(mono, 1);
                const Rational v = kind == ProductKind::classical ? moments.inner_ball(e.poly, x)
                                                                  : moments.inner_lambda(e.poly, x);
                witness.add_term(mono, v);
            }
        // witness collects <element, x^gamma> as the coefficient of x^gamma.
        rec.zero(identity, "orthogonal to every polynomial of lower degree",
                 with(p, {{"k", num(e.index.k)}, {"nu", num(e.index.nu)}}), witness);
    }
}

inline void suite_classical(const SuiteConfig& c, Recorder& rec, HarmonicCache& cache) {
    const MeasureParams mp{c.dim, c.mu, 0};
    MomentTable moments(mp);
    for (unsigned n = 0; n <= c.max_degree; ++n) {
        const Params p = with(base_params(c), {{"n", num(n)}});
        const auto P = classical_basis(n, mp, cache);
        rec.match("classical-dimension", "dim V_n^d = binom(n+d-1, n)", p,
                  Rational(orthogonal_space_dimension(static_cast<long>(c.dim), n)),
                  Rational(static_cast<long>(P.size())));
        record_gram(rec, "classical-gram", "<P^n_(k,nu), P^n_(j,eta)>_mu = 0", p, P,
                    gram_matrix(P, mp, ProductKind::classical));
        record_lower_degrees(rec, "classical-lower-degree", p, P, moments, ProductKind::classical);
    }
}

inline void suite_lambda(const SuiteConfig& c, Recorder& rec, HarmonicCache& cache) {
    const MeasureParams mp = c.measure();
    const long d = static_cast<long>(c.dim);
    MomentTable moments(mp);
    for (unsigned n = 0; n <= c.max_degree; ++n) {
        const Params p = with(base_params(c), {{"n", num(n)}, {"lambda", to_string(*c.lambda)}});
        std::vector<BallBasisElement> Q;
        try {
            Q = lambda_basis(n, mp, cache);
        } catch (const UnsupportedExact& e) {
            rec.skip("lambda-gram", "<Q^n_(k,nu), Q^n_(j,eta)>^lambda_mu = 0", p, e.what());
            continue;
        }
        record_gram(rec, "lambda-gram", "<Q^n_(k,nu), Q^n_(j,eta)>^lambda_mu = 0", p, Q,
                    gram_matrix(Q, mp, ProductKind::lambda));
        record_lower_degrees(rec, "lambda-lower-degree", p, Q, moments, ProductKind::lambda);
        for (const auto& e : Q) {
            const auto kp = KrallParams::from_lambda(c.mu - Rational(1, 2), e.index.beta_k,
                                                     *c.lambda, d);
            rec.match("lambda-norm-factorization",
                      "<Q,Q>^lambda_mu = <Y,Y>_S (q_k, q_k)^lambda_(mu-1/2, beta_k)",
                      with(p, {{"k", num(e.index.k)}, {"nu", num(e.index.nu)}}),
                      e.harmonic_sq_norm * uni_inner_jacobi_mass(e.radial, e.radial, kp), e.sq_norm);
        }
    }
}

inline void suite_d_mu(const SuiteConfig& c, Recorder& rec, HarmonicCache& cache) {
    const MeasureParams mp{c.dim, c.mu, 0};
    const OperatorParams op = c.operators();
    for (unsigned n = 0; n <= c.max_degree; ++n) {
        const Rational ev = d_mu_eigenvalue(n, op).value;
        for (const auto& e : classical_basis(n, mp, cache))
            rec.zero("d-mu-eigen", "D_mu P = -(n+d)(n+2mu-1) P",
                     with(base_params(c), {{"n", num(n)}, {"k", num(e.index.k)},
                                           {"nu", num(e.index.nu)}}),
                     apply_D_mu(e.poly, op) - e.poly * ev);
    }
}

inline void suite_connection(const SuiteConfig& c, Recorder& rec, HarmonicCache& cache) {
    const Params base = with(base_params(c), {{"M", to_string(*c.M)}});
    if (c.mu != Rational(1, 2)) {
        rec.skip("connection", "[M - (1/4)(1-|x|^2) Delta] P = Q", base,
                 "the connection operators are established only for mu = 1/2");
        return;
    }
    const MeasureParams mp = c.measure();
    const OperatorParams op = c.operators();
    const long d = static_cast<long>(c.dim);
    for (unsigned n = 0; n <= c.max_degree; ++n) {
        const auto P = classical_basis(n, mp, cache);
        const auto Q = lambda_basis(n, mp, cache);
        for (std::size_t i = 0; i < P.size(); ++i) {
            const unsigned k = P[i].index.k;
            const Params p = with(base, {{"n", num(n)}, {"k", num(k)}, {"nu", num(P[i].index.nu)}});
            const Rational ev = lambda_eigenvalue(n, k, op).value;
            rec.zero("connection-A1", "[M - (1/4)(1-|x|^2) Delta] P^n_(k,nu) = Q^n_(k,nu)", p,
                     apply_A1(P[i].poly, op) - Q[i].poly);
            rec.zero("connection-A2",
                     "[M + d/2 - (1/4)(1-|x|^2) Delta + <x,grad>] Q^n_(k,nu) = Lambda_(n,k) P^n_(k,nu)",
                     p, apply_A2(Q[i].poly, op) - P[i].poly * ev);
        }
        for (unsigned k = 0; 2 * k <= n; ++k) {
            const Params p = with(base, {{"n", num(n)}, {"k", num(k)}});
            const auto radial = radial_operator_residuals(n, k, d, *c.M);
            rec.zero("radial-M1", "M1 r^(n-2k) P_k(2r^2-1) = r^(n-2k) q_k(2r^2-1)", p, radial.m1);
            rec.zero("radial-M2", "M2 r^(n-2k) q_k(2r^2-1) = Lambda_(n,k) r^(n-2k) P_k(2r^2-1)", p,
                     radial.m2);
            rec.match("eigenvalue-forms",
                      "(M+k(n-k+(d-2)/2))(M+(k+1)(n-k+d/2)) = (M+k(k+b_k))(M+(k+1)(k+b_k+1))", p,
                      lambda_eigenvalue(n, k, op).value, lambda_eigenvalue_beta_form(n, k, op).value);
        }
    }
}

inline void suite_fourth_order(const SuiteConfig& c, Recorder& rec, HarmonicCache& cache) {
    const Params base = with(base_params(c), {{"M", to_string(*c.M)}});
    if (c.mu != Rational(1, 2)) {
        rec.skip("fourth-order", "A1 A2 Q = Lambda_(n,k) Q", base,
                 "the fourth-order equation is established only for mu = 1/2");
        return;
    }
    const MeasureParams mp = c.measure();
    const OperatorParams op = c.operators();
    const Rational corrupt = c.corrupt_eigenvalue.value_or(Rational(0));
    for (unsigned n = 0; n <= c.max_degree; ++n)
        for (const auto& e : lambda_basis(n, mp, cache)) {
            const Rational ev = lambda_eigenvalue(n, e.index.k, op).value + corrupt;
            rec.zero("fourth-order",
                     "[M - (1/4)(1-|x|^2) Delta][M + d/2 - (1/4)(1-|x|^2) Delta + <x,grad>] Q = "
                     "Lambda_(n,k) Q",
                     with(base, {{"n", num(n)}, {"k", num(e.index.k)}, {"nu", num(e.index.nu)},
                                 {"Lambda", to_string(ev)}}),
                     fourth_order_residual(e.poly, ev, op));
        }
    if (c.max_degree >= 2) {
        // x1^2 straddles the k = 0 and k = 1 eigenspaces of degree 2.
        const MultiPoly f = MultiPoly::term(Monomial::unit(c.dim, 0, 2), 1);
        const MultiPoly residual =
            fourth_order_residual(f, lambda_eigenvalue(2, 0, op).value, op);
        rec.push("fourth-order-negative-control", "x1^2 is not an eigenfunction of A1 A2",
                 with(base, {{"f", f.str()}}),
                 residual.is_zero() ? Status::fail : Status::exact_match, residual.str());
    }
}

}  // namespace detail

/// Runs every selected suite in the fixed order of all_suites().
inline Report run(SuiteConfig config) {
    config.resolve();
    Report report;
    std::mt19937_64 rng(config.seed);
    HarmonicCache cache;
    for (const auto& name : all_suites()) {
        if (!config.wants(name)) continue;
        detail::Recorder rec(report, name, config.timing);
        if (name == "jacobi") detail::suite_jacobi(config, rec);
        else if (name == "krall1d") detail::suite_krall1d(config, rec, rng);
        else if (name == "harmonics") detail::suite_harmonics(config, rec, rng);
        else if (name == "moments") detail::suite_moments(config, rec);
        else if (name == "classical-orthogonality") detail::suite_classical(config, rec, cache);
        else if (name == "lambda-orthogonality") detail::suite_lambda(config, rec, cache);
        else if (name == "d-mu-eigen") detail::suite_d_mu(config, rec, cache);
        else if (name == "connection") detail::suite_connection(config, rec, cache);
        else if (name == "fourth-order") detail::suite_fourth_order(config, rec, cache);
    }
    std::map<std::string, std::string> cfg = {
        {"dim", std::to_string(config.dim)},        {"mu", to_string(config.mu)},
        {"lambda", to_string(*config.lambda)},      {"M", to_string(*config.M)},
        {"max_degree", std::to_string(config.max_degree)},
        {"seed", std::to_string(config.seed)}};
    std::string suites;
    for (const auto& s : config.suites) suites += (suites.empty() ? "" : ",") + s;
    cfg["suites"] = suites;
    if (config.corrupt_eigenvalue) cfg["corrupt_eigenvalue"] = to_string(*config.corrupt_eigenvalue);
    report.finalize(cfg);
    return report;
}

/// Canonical JSON of one degree of a ball basis. Lambda_(n,k) is attached to
/// lambda-kind elements when mu = 1/2, the only case with a fourth-order equation.
inline nlohmann::json export_basis(SuiteConfig config, unsigned n, BasisKind kind) {
    config.resolve();
    const MeasureParams mp = kind == BasisKind::classical
                                 ? MeasureParams{config.dim, config.mu, 0}
                                 : config.measure();
    const auto elements = kind == BasisKind::classical ? classical_basis(n, mp) : lambda_basis(n, mp);
    const bool with_lambda = kind == BasisKind::lambda_modified && config.mu == Rational(1, 2);
    nlohmann::json out = {{"dim", config.dim},
                          {"mu", to_string(config.mu)},
                          {"kind", to_string(kind)},
                          {"n", n}};
    if (kind == BasisKind::lambda_modified) {
        out["lambda"] = to_string(*config.lambda);
        out["M"] = to_string(*config.M);
    }
    nlohmann::json list = nlohmann::json::array();
    for (const auto& e : elements) {
        nlohmann::json j = {{"n", e.index.n},
                            {"k", e.index.k},
                            {"nu", e.index.nu},
                            {"beta_k", to_string(e.index.beta_k)},
                            {"radial", e.radial.str()},
                            {"harmonic", e.harmonic.str()},
                            {"poly", e.poly.str()},
                            {"sq_norm", to_string(e.sq_norm)},
                            {"harmonic_sq_norm", to_string(e.harmonic_sq_norm)}};
        if (with_lambda)
            j["Lambda"] = to_string(lambda_eigenvalue(n, e.index.k, config.operators()).value);
        list.push_back(std::move(j));
    }
    out["elements"] = std::move(list);
    return out;
}

}  // namespace ballkrall

#endif  // BALLKRALL_VERIFY_HPP
