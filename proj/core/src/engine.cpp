#include "rigidity/engine.hpp"

#include "rigidity/prime_pool.hpp"

#include <stdexcept>

namespace rigidity {

namespace {

std::string bound_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// (per_round)^rounds, clamped into [0,1], rendered "num/den".
std::string amplified_bound(const Rational& per_round, int rounds) {
    Rational r = per_round;
    if (r < 0) r = 0;
    if (r > 1) r = 1;
    BigInt num = boost::multiprecision::pow(numerator(r), static_cast<unsigned>(rounds));
    BigInt den = boost::multiprecision::pow(denominator(r), static_cast<unsigned>(rounds));
    return bound_string(Rational(num, den));
}

void require_cfg(const TestConfig& cfg) {
    if (cfg.dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (cfg.rounds < 1) throw std::invalid_argument("rounds must be >= 1");
}

// Asimow-Roth corollary: with v <= d+1 vertices a generic framework is
// globally rigid iff the graph is complete, otherwise not even locally
// rigid. Certain in both directions.
Verdict small_graph_verdict(const Graph& g, bool global) {
    Verdict out;
    if (g.is_complete()) {
        out.kind = global ? VerdictKind::GloballyRigid : VerdictKind::LocallyRigid;
        out.certainty = Certainty::certain_yes;
    } else {
        out.kind = global ? VerdictKind::NotGloballyRigid : VerdictKind::NotLocallyRigid;
        out.certainty = Certainty::probabilistic_no;
    }
    out.false_no_bound = "0/1";
    return out;
}

}  // namespace

Constants constants(int v, int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (v < d + 1) throw std::invalid_argument("small-graph regime: v < d+1");
    long long vd = static_cast<long long>(v) * d;
    return Constants{vd - static_cast<long long>(d) * (d + 1) / 2, v - d - 1ll};
}

Framework sample_framework(int v, int d, std::uint64_t coord_bound, SplitRng& rng) {
    if (coord_bound < 1) throw std::invalid_argument("coordinate bound must be >= 1");
    Framework f;
    f.v = v;
    f.d = d;
    f.coord_bound = coord_bound;
    f.coords.resize(static_cast<std::size_t>(v) * d);
    for (auto& c : f.coords) c = rng.uniform(1, coord_bound);
    return f;
}

FpMatrix rigidity_matrix(const Graph& g, const Framework& f, std::uint64_t p) {
    if (f.v != g.vertex_count()) throw std::invalid_argument("framework/graph size mismatch");
    const int d = f.d;
    FpMatrix m(g.edge_count(), g.vertex_count() * d, p);
    int row = 0;
    for (const auto& e : g.edges()) {
        for (int i = 0; i < d; ++i) {
            long long diff = static_cast<long long>(f.coord(e.u, i)) -
                             static_cast<long long>(f.coord(e.w, i));
            m.set_signed(row, e.u * d + i, diff);
            m.set_signed(row, e.w * d + i, -diff);
        }
        ++row;
    }
    return m;
}

RatMatrix rigidity_matrix_rational(const Graph& g, const Framework& f) {
    if (f.v != g.vertex_count()) throw std::invalid_argument("framework/graph size mismatch");
    const int d = f.d;
    RatMatrix m(g.edge_count(), g.vertex_count() * d);
    int row = 0;
    for (const auto& e : g.edges()) {
        for (int i = 0; i < d; ++i) {
            long long diff = static_cast<long long>(f.coord(e.u, i)) -
                             static_cast<long long>(f.coord(e.w, i));
            m.at(row, e.u * d + i) = diff;
            m.at(row, e.w * d + i) = -diff;
        }
        ++row;
    }
    return m;
}

FpMatrix stress_to_matrix(const Graph& g, const std::vector<std::uint64_t>& omega,
                          std::uint64_t p) {
    if (static_cast<int>(omega.size()) != g.edge_count())
        throw std::invalid_argument("stress vector length mismatch");
    const int v = g.vertex_count();
    FpMatrix s(v, v, p);
    std::vector<std::uint64_t> diag(v, 0);
    int idx = 0;
    for (const auto& e : g.edges()) {
        std::uint64_t w = omega[idx++] % p;
        s.set(e.u, e.w, w);
        s.set(e.w, e.u, w);
        diag[e.u] = add_mod(diag[e.u], w, p);
        diag[e.w] = add_mod(diag[e.w], w, p);
    }
    for (int u = 0; u < v; ++u) s.set(u, u, sub_mod(0, diag[u], p));
    return s;
}

RatMatrix stress_to_matrix_rational(const Graph& g, const std::vector<Rational>& omega) {
    if (static_cast<int>(omega.size()) != g.edge_count())
        throw std::invalid_argument("stress vector length mismatch");
    const int v = g.vertex_count();
    RatMatrix s(v, v);
    std::vector<Rational> diag(v);
    int idx = 0;
    for (const auto& e : g.edges()) {
        const Rational& w = omega[idx++];
        s.at(e.u, e.w) = w;
        s.at(e.w, e.u) = w;
        diag[e.u] += w;
        diag[e.w] += w;
    }
    for (int u = 0; u < v; ++u) s.at(u, u) = -diag[u];
    return s;
}

std::string verdict_kind_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::GloballyRigid: return "GloballyRigid";
        case VerdictKind::NotGloballyRigid: return "NotGloballyRigid";
        case VerdictKind::LocallyRigid: return "LocallyRigid";
        case VerdictKind::NotLocallyRigid: return "NotLocallyRigid";
    }
    throw std::invalid_argument("unknown verdict kind");
}

VerdictKind verdict_kind_from_string(const std::string& name) {
    if (name == "GloballyRigid") return VerdictKind::GloballyRigid;
    if (name == "NotGloballyRigid") return VerdictKind::NotGloballyRigid;
    if (name == "LocallyRigid") return VerdictKind::LocallyRigid;
    if (name == "NotLocallyRigid") return VerdictKind::NotLocallyRigid;
    throw std::invalid_argument("unknown verdict kind: " + name);
}

std::string certainty_name(Certainty c) {
    return c == Certainty::certain_yes ? "certain_yes" : "probabilistic_no";
}

Certainty certainty_from_string(const std::string& name) {
    if (name == "certain_yes") return Certainty::certain_yes;
    if (name == "probabilistic_no") return Certainty::probabilistic_no;
    throw std::invalid_argument("unknown certainty: " + name);
}

namespace {

// Shared between the public stress_sample and the checkers, which want the
// observed rank of E even for rejected rounds.
struct SampleDetail {
    int rank_e = 0;
    std::optional<StressSample> sample;
};

SampleDetail stress_sample_detail(const Graph& g, const Framework& f, std::uint64_t p,
                                  SplitRng& rng) {
    const int v = g.vertex_count();
    const int e = g.edge_count();
    const int d = f.d;
    const auto [t, s] = constants(v, d);
    if (e < t) throw std::invalid_argument("stress_sample needs e >= t");
    const int vd = v * d;
    const int h_rows = e - static_cast<int>(t);

    // E(rho,H): transpose of the rigidity matrix stacked over h random rows;
    // vd + e - t rows equals the paper count e + (d+1 choose 2).
    FpMatrix dl = rigidity_matrix(g, f, p);
    FpMatrix em(vd + h_rows, e, p);
    for (int r = 0; r < e; ++r)
        for (int c = 0; c < vd; ++c) em.set(c, r, dl.at(r, c));
    for (int r = 0; r < h_rows; ++r)
        for (int c = 0; c < e; ++c) em.set(vd + r, c, rng.uniform(1, f.coord_bound) % p);

    SampleDetail out;
    out.rank_e = rank_mod_p(em);
    if (out.rank_e < e) return out;  // rejection: safe "no"

    std::vector<std::uint64_t> b(vd + h_rows, 0);
    if (h_rows > 0) b[vd] = 1;  // the first H row; all zeros when e == t
    std::vector<std::uint64_t> omega = solve_mod_p(em, b);
    FpMatrix sm = stress_to_matrix(g, omega, p);
    out.sample = StressSample{std::move(omega), std::move(sm), out.rank_e};
    return out;
}

struct RatSampleDetail {
    int rank_e = 0;
    std::optional<RatStressSample> sample;
};

RatSampleDetail stress_sample_rational_detail(const Graph& g, const Framework& f, SplitRng& rng) {
    const int v = g.vertex_count();
    const int e = g.edge_count();
    const int d = f.d;
    const auto [t, s] = constants(v, d);
    if (e < t) throw std::invalid_argument("stress_sample needs e >= t");
    const int vd = v * d;
    const int h_rows = e - static_cast<int>(t);

    RatMatrix dl = rigidity_matrix_rational(g, f);
    RatMatrix em(vd + h_rows, e);
    for (int r = 0; r < e; ++r)
        for (int c = 0; c < vd; ++c) em.at(c, r) = dl.at(r, c);
    for (int r = 0; r < h_rows; ++r)
        for (int c = 0; c < e; ++c) em.at(vd + r, c) = rng.uniform(1, f.coord_bound);

    RatSampleDetail out;
    out.rank_e = rank_rational(em);
    if (out.rank_e < e) return out;

    std::vector<Rational> b(vd + h_rows);
    if (h_rows > 0) b[vd] = 1;
    std::vector<Rational> omega = solve_rational(em, b);
    RatMatrix sm = stress_to_matrix_rational(g, omega);
    out.sample = RatStressSample{std::move(omega), std::move(sm), out.rank_e};
    return out;
}

}  // namespace

std::optional<StressSample> stress_sample(const Graph& g, const Framework& f, std::uint64_t p,
                                          SplitRng& rng) {
    return stress_sample_detail(g, f, p, rng).sample;
}

std::optional<RatStressSample> stress_sample_rational(const Graph& g, const Framework& f,
                                                      SplitRng& rng) {
    return stress_sample_rational_detail(g, f, rng).sample;
}

std::optional<std::vector<FpMatrix>> stress_basis(const Graph& g, const Framework& f,
                                                  std::uint64_t p) {
    const auto [t, s] = constants(g.vertex_count(), f.d);
    FpMatrix dl = rigidity_matrix(g, f, p);
    if (rank_mod_p(dl) != t) return std::nullopt;
    FpMatrix basis = kernel_basis_mod_p(transpose(dl));  // e x (e-t)
    std::vector<FpMatrix> out;
    out.reserve(basis.cols());
    for (int j = 0; j < basis.cols(); ++j) {
        std::vector<std::uint64_t> omega(g.edge_count());
        for (int i = 0; i < g.edge_count(); ++i) omega[i] = basis.at(i, j);
        out.push_back(stress_to_matrix(g, omega, p));
    }
    return out;
}

std::optional<std::vector<RatMatrix>> stress_basis_rational(const Graph& g, const Framework& f) {
    const auto [t, s] = constants(g.vertex_count(), f.d);
    RatMatrix dl = rigidity_matrix_rational(g, f);
    if (rank_rational(dl) != t) return std::nullopt;
    RatMatrix basis = kernel_basis_rational(transpose(dl));
    std::vector<RatMatrix> out;
    out.reserve(basis.cols());
    for (int j = 0; j < basis.cols(); ++j) {
        std::vector<Rational> omega(g.edge_count());
        for (int i = 0; i < g.edge_count(); ++i) omega[i] = basis.at(i, j);
        out.push_back(stress_to_matrix_rational(g, omega));
    }
    return out;
}

Verdict check_local(const Graph& g, int d, const TestConfig& cfg) {
    require_cfg(cfg);
    const int v = g.vertex_count();
    if (v <= d + 1) return small_graph_verdict(g, /*global=*/false);
    const auto [t, s] = constants(v, d);

    Verdict out;
    out.t = t;
    out.s = s;
    const std::uint64_t n = cfg.n_override.value_or(4ull * static_cast<std::uint64_t>(t));
    out.n_bound = n;

    if (cfg.mode == Mode::modular) {
        PrimePool pool = build_prime_pool(n, n);
        for (int i = 0; i < cfg.rounds; ++i) {
            SplitRng rng = round_rng(cfg.seed, Stream::local, i);
            std::uint64_t p = pool.pick(rng);
            Framework f = sample_framework(v, d, n, rng);
            int r = rank_mod_p(rigidity_matrix(g, f, p));
            RoundRecord rec;
            rec.round = i;
            rec.prime = p;
            rec.rank_dl = r;
            out.rounds.push_back(rec);
            if (r == t) {
                out.kind = VerdictKind::LocallyRigid;
                out.certainty = Certainty::certain_yes;
                out.false_no_bound = "0/1";
                return out;
            }
        }
        out.false_no_bound = amplified_bound(Rational(1, 2), cfg.rounds);
    } else {
        for (int i = 0; i < cfg.rounds; ++i) {
            SplitRng rng = round_rng(cfg.seed, Stream::local, i);
            Framework f = sample_framework(v, d, n, rng);
            int r = rank_rational(rigidity_matrix_rational(g, f));
            RoundRecord rec;
            rec.round = i;
            rec.rank_dl = r;
            out.rounds.push_back(rec);
            if (r == t) {
                out.kind = VerdictKind::LocallyRigid;
                out.certainty = Certainty::certain_yes;
                out.false_no_bound = "0/1";
                return out;
            }
        }
        out.false_no_bound = amplified_bound(Rational(t, n), cfg.rounds);
    }
    out.kind = VerdictKind::NotLocallyRigid;
    out.certainty = Certainty::probabilistic_no;
    return out;
}

Verdict check_global(const Graph& g, int d, const TestConfig& cfg) {
    require_cfg(cfg);
    if (cfg.mode == Mode::rational) return oracle_check_global_rational(g, d, cfg);
    const int v = g.vertex_count();
    const int e = g.edge_count();
    if (v <= d + 1) return small_graph_verdict(g, /*global=*/true);
    const auto [t, s] = constants(v, d);

    Verdict out;
    out.t = t;
    out.s = s;
    out.kind = VerdictKind::NotGloballyRigid;
    out.certainty = Certainty::probabilistic_no;

    if (e < t) {
        // Too few edges to be generically locally rigid; certain no.
        out.false_no_bound = "0/1";
        return out;
    }

    const std::uint64_t n =
        cfg.n_override.value_or(4ull * static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(e));
    out.n_bound = n;
    PrimePool pool = build_prime_pool(n, n);

    for (int i = 0; i < cfg.rounds; ++i) {
        SplitRng rng = round_rng(cfg.seed, Stream::global, i);
        std::uint64_t p = pool.pick(rng);
        Framework f = sample_framework(v, d, n, rng);
        auto detail = stress_sample_detail(g, f, p, rng);
        RoundRecord rec;
        rec.round = i;
        rec.prime = p;
        rec.rank_e = detail.rank_e;
        if (!detail.sample) {
            rec.rejected = true;
            out.rounds.push_back(rec);
            continue;
        }
        int rank_omega = rank_mod_p(detail.sample->stress_matrix);
        rec.rank_omega = rank_omega;
        out.rounds.push_back(rec);
        if (rank_omega == s) {
            out.kind = VerdictKind::GloballyRigid;
            out.certainty = Certainty::certain_yes;
            out.false_no_bound = "0/1";
            return out;
        }
    }
    out.false_no_bound = amplified_bound(Rational(1, 2), cfg.rounds);
    return out;
}

Verdict oracle_check_global_rational(const Graph& g, int d, const TestConfig& cfg) {
    require_cfg(cfg);
    const int v = g.vertex_count();
    const int e = g.edge_count();
    if (v > 12 && !cfg.force)
        throw std::invalid_argument("rational mode refuses v > 12 unless forced");
    if (v <= d + 1) return small_graph_verdict(g, /*global=*/true);
    const auto [t, s] = constants(v, d);

    Verdict out;
    out.t = t;
    out.s = s;
    out.kind = VerdictKind::NotGloballyRigid;
    out.certainty = Certainty::probabilistic_no;

    if (e < t) {
        out.false_no_bound = "0/1";
        return out;
    }

    const std::uint64_t n =
        cfg.n_override.value_or(4ull * static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(e));
    out.n_bound = n;

    for (int i = 0; i < cfg.rounds; ++i) {
        SplitRng rng = round_rng(cfg.seed, Stream::global, i);
        Framework f = sample_framework(v, d, n, rng);
        auto detail = stress_sample_rational_detail(g, f, rng);
        RoundRecord rec;
        rec.round = i;
        rec.rank_e = detail.rank_e;
        if (!detail.sample) {
            rec.rejected = true;
            out.rounds.push_back(rec);
            continue;
        }
        int rank_omega = rank_rational(detail.sample->stress_matrix);
        rec.rank_omega = rank_omega;
        out.rounds.push_back(rec);
        if (rank_omega == s) {
            out.kind = VerdictKind::GloballyRigid;
            out.certainty = Certainty::certain_yes;
            out.false_no_bound = "0/1";
            return out;
        }
    }
    // Theorem bound: one round errs with probability at most ve/N.
    out.false_no_bound = amplified_bound(
        Rational(static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(e), n), cfg.rounds);
    return out;
}

namespace {

// Shared round loop for the stress diagnostics: the modular rank can only
// drop below its generic value, never exceed it, so the best round wins.
template <typename Fn>
std::optional<int> best_over_rounds(const Graph& g, int d, const TestConfig& cfg, Stream stream,
                                    Fn&& per_round) {
    const int v = g.vertex_count();
    const int e = g.edge_count();
    if (v < d + 1) return std::nullopt;
    const auto [t, s] = constants(v, d);
    if (e < t) return std::nullopt;
    const std::uint64_t n =
        cfg.n_override.value_or(4ull * static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(e));

    std::optional<PrimePool> pool;
    if (cfg.mode == Mode::modular) pool = build_prime_pool(n, n);

    std::optional<int> best;
    for (int i = 0; i < cfg.rounds; ++i) {
        SplitRng rng = round_rng(cfg.seed, stream, i);
        std::uint64_t p = pool ? pool->pick(rng) : 0;
        Framework f = sample_framework(v, d, n, rng);
        std::optional<int> value = per_round(f, p, rng);
        if (!value) continue;
        if (!best || *value > *best) best = *value;
    }
    return best;
}

}  // namespace

std::optional<int> k_min_estimate(const Graph& g, int d, const TestConfig& cfg) {
    require_cfg(cfg);
    const int v = g.vertex_count();
    auto best_rank = best_over_rounds(
        g, d, cfg, Stream::k_min,
        [&](const Framework& f, std::uint64_t p, SplitRng& rng) -> std::optional<int> {
            if (cfg.mode == Mode::modular) {
                auto sample = stress_sample(g, f, p, rng);
                if (!sample) return std::nullopt;
                return rank_mod_p(sample->stress_matrix);
            }
            auto sample = stress_sample_rational(g, f, rng);
            if (!sample) return std::nullopt;
            return rank_rational(sample->stress_matrix);
        });
    if (!best_rank) return std::nullopt;
    return v - *best_rank;
}

std::optional<SharedStress> k_sh_estimate(const Graph& g, int d, const TestConfig& cfg) {
    require_cfg(cfg);
    const int v = g.vertex_count();
    auto best_rank = best_over_rounds(
        g, d, cfg, Stream::k_sh,
        [&](const Framework& f, std::uint64_t p, SplitRng&) -> std::optional<int> {
            if (cfg.mode == Mode::modular) {
                auto basis = stress_basis(g, f, p);
                if (!basis) return std::nullopt;
                // Stack the basis stress matrices; the kernel of the stack is
                // the intersection of the individual kernels.
                FpMatrix stack(static_cast<int>(basis->size()) * v, v, p);
                for (std::size_t b = 0; b < basis->size(); ++b)
                    for (int r = 0; r < v; ++r)
                        for (int c = 0; c < v; ++c)
                            stack.set(static_cast<int>(b) * v + r, c, (*basis)[b].at(r, c));
                return rank_mod_p(stack);
            }
            auto basis = stress_basis_rational(g, f);
            if (!basis) return std::nullopt;
            RatMatrix stack(static_cast<int>(basis->size()) * v, v);
            for (std::size_t b = 0; b < basis->size(); ++b)
                for (int r = 0; r < v; ++r)
                    for (int c = 0; c < v; ++c)
                        stack.at(static_cast<int>(b) * v + r, c) = (*basis)[b].at(r, c);
            return rank_rational(stack);
        });
    if (!best_rank) return std::nullopt;
    int k_sh = v - *best_rank;
    return SharedStress{k_sh, static_cast<long long>(v) * d - static_cast<long long>(k_sh) * d};
}

int dot_space_dim(const Graph& g, const FpMatrix& stress_matrix) {
    const std::uint64_t p = stress_matrix.modulus();
    FpMatrix kernel = kernel_basis_mod_p(stress_matrix);  // v x k
    const int k = kernel.cols();
    const int e = g.edge_count();
    FpMatrix dots(k * (k + 1) / 2, e, p);
    int row = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            int m = 0;
            for (const auto& edge : g.edges()) {
                std::uint64_t ai = sub_mod(kernel.at(edge.w, i), kernel.at(edge.u, i), p);
                std::uint64_t aj = sub_mod(kernel.at(edge.w, j), kernel.at(edge.u, j), p);
                dots.set(row, m++, mul_mod(ai, aj, p));
            }
            ++row;
        }
    return rank_mod_p(dots);
}

int dot_space_dim_rational(const Graph& g, const RatMatrix& stress_matrix) {
    RatMatrix kernel = kernel_basis_rational(stress_matrix);
    const int k = kernel.cols();
    const int e = g.edge_count();
    RatMatrix dots(k * (k + 1) / 2, e);
    int row = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            int m = 0;
            for (const auto& edge : g.edges()) {
                Rational ai = kernel.at(edge.w, i) - kernel.at(edge.u, i);
                Rational aj = kernel.at(edge.w, j) - kernel.at(edge.u, j);
                dots.at(row, m++) = ai * aj;
            }
            ++row;
        }
    return rank_rational(dots);
}

std::optional<int> dot_space_estimate(const Graph& g, int d, const TestConfig& cfg) {
    require_cfg(cfg);
    return best_over_rounds(
        g, d, cfg, Stream::dot_space,
        [&](const Framework& f, std::uint64_t p, SplitRng& rng) -> std::optional<int> {
            if (cfg.mode == Mode::modular) {
                auto sample = stress_sample(g, f, p, rng);
                if (!sample) return std::nullopt;
                return dot_space_dim(g, sample->stress_matrix);
            }
            auto sample = stress_sample_rational(g, f, rng);
            if (!sample) return std::nullopt;
            return dot_space_dim_rational(g, sample->stress_matrix);
        });
}

HendricksonCheck check_hendrickson(const Graph& g, int d, const TestConfig& cfg) {
    require_cfg(cfg);
    HendricksonCheck out;
    out.connectivity_ok = vertex_connectivity_at_least(g, d + 1);
    out.redundant_ok = true;
    int idx = 0;
    for (const auto& e : g.edges()) {
        TestConfig sub_cfg = cfg;
        sub_cfg.seed = round_rng(cfg.seed, Stream::hendrickson, idx++).next();
        Verdict v = check_local(delete_edge(g, e.u, e.w), d, sub_cfg);
        if (v.kind != VerdictKind::LocallyRigid) {
            out.redundant_ok = false;
            break;
        }
    }
    return out;
}

bool check_dimension_one(const Graph& g) {
    if (g.vertex_count() < 3)
        throw std::invalid_argument("check_dimension_one needs v >= 3 (small-graph rule applies)");
    return vertex_connectivity_at_least(g, 2);
}

}  // namespace rigidity
