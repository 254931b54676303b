#ifndef RIGIDITY_ENGINE_HPP
#define RIGIDITY_ENGINE_HPP

#include "rigidity/config.hpp"
#include "rigidity/fp_matrix.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/rat_matrix.hpp"
#include "rigidity/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rigidity {

// t = vd - (d+1 choose 2): rank of the rigidity matrix of an
// infinitesimally rigid framework. s = v - d - 1: maximal rank of an
// equilibrium stress matrix. Requires v >= d+1 (smaller graphs are decided
// by the complete-graph rule instead).
struct Constants {
    long long t;
    long long s;
};
Constants constants(int v, int d);

// Integer coordinates, one row per vertex, each sampled uniformly from
// [1, coord_bound].
struct Framework {
    int v = 0;
    int d = 0;
    std::uint64_t coord_bound = 0;
    std::vector<std::uint64_t> coords;  // v*d, vertex-major

    std::uint64_t coord(int vertex, int axis) const {
        return coords[static_cast<std::size_t>(vertex) * d + axis];
    }
};

Framework sample_framework(int v, int d, std::uint64_t coord_bound, SplitRng& rng);

// Jacobian of the length-squared map at f (the overall factor 2 dropped):
// e rows in canonical edge order, v*d columns vertex-major. The {u,w} row
// carries rho(u)-rho(w) in u's block and the negation in w's block.
FpMatrix rigidity_matrix(const Graph& g, const Framework& f, std::uint64_t p);
RatMatrix rigidity_matrix_rational(const Graph& g, const Framework& f);

// v x v equilibrium stress matrix from a per-edge stress vector: symmetric,
// zero on non-edges, diagonal chosen so each row sums to zero.
FpMatrix stress_to_matrix(const Graph& g, const std::vector<std::uint64_t>& omega,
                          std::uint64_t p);
RatMatrix stress_to_matrix_rational(const Graph& g, const std::vector<Rational>& omega);

enum class VerdictKind { GloballyRigid, NotGloballyRigid, LocallyRigid, NotLocallyRigid };
enum class Certainty { certain_yes, probabilistic_no };

std::string verdict_kind_name(VerdictKind kind);
VerdictKind verdict_kind_from_string(const std::string& name);
std::string certainty_name(Certainty c);
Certainty certainty_from_string(const std::string& name);

struct RoundRecord {
    int round = 0;
    std::optional<std::uint64_t> prime;  // unset in rational mode
    std::optional<int> rank_dl;          // rigidity matrix rank (local checks)
    std::optional<int> rank_e;           // rank of E(rho,H) (global checks)
    std::optional<int> rank_omega;       // stress matrix rank (global checks)
    bool rejected = false;

    bool operator==(const RoundRecord&) const = default;
};

// "Yes" answers are always correct; "no" answers carry an explicit
// false-negative probability bound (exact rational, rendered "num/den").
struct Verdict {
    VerdictKind kind = VerdictKind::NotLocallyRigid;
    Certainty certainty = Certainty::probabilistic_no;
    std::string false_no_bound = "0/1";
    std::optional<long long> t;
    std::optional<long long> s;
    std::uint64_t n_bound = 0;
    std::vector<RoundRecord> rounds;

    bool yes() const { return certainty == Certainty::certain_yes; }
    bool operator==(const Verdict&) const = default;
};

// One random equilibrium stress of f mod p: stacks H (e-t random rows with
// entries in [1,N]) under the transposed rigidity matrix to form E(rho,H),
// rejects unless rank(E) = e, then solves E omega = b for the b with a
// single 1 in the first H row. Rejection is a value, not a fault.
struct StressSample {
    std::vector<std::uint64_t> omega;  // per-edge, canonical order
    FpMatrix stress_matrix;
    int rank_e = 0;
};
std::optional<StressSample> stress_sample(const Graph& g, const Framework& f, std::uint64_t p,
                                          SplitRng& rng);

struct RatStressSample {
    std::vector<Rational> omega;
    RatMatrix stress_matrix;
    int rank_e = 0;
};
std::optional<RatStressSample> stress_sample_rational(const Graph& g, const Framework& f,
                                                      SplitRng& rng);

// Basis of the space of equilibrium stress matrices at f (kernel of the
// transposed rigidity matrix, dimension e-t); rejects if the observed
// rigidity-matrix rank falls short of t.
std::optional<std::vector<FpMatrix>> stress_basis(const Graph& g, const Framework& f,
                                                  std::uint64_t p);
std::optional<std::vector<RatMatrix>> stress_basis_rational(const Graph& g, const Framework& f);

// Monte Carlo decision procedures. One-sided: a "yes" is certain, a "no" is
// wrong with probability at most (1/2)^rounds.
Verdict check_local(const Graph& g, int d, const TestConfig& cfg);
Verdict check_global(const Graph& g, int d, const TestConfig& cfg);

// Exact-rational analogue of check_global at a random integer framework;
// per-round false-no probability at most ve/N. Intended for v <= 12.
Verdict oracle_check_global_rational(const Graph& g, int d, const TestConfig& cfg);

// Stress-kernel diagnostics. Modular ranks can only drop, so estimates take
// the best (largest) observed rank across rounds; nullopt when every round
// rejected or the graph has no stress pipeline (v < d+1 or e < t).
std::optional<int> k_min_estimate(const Graph& g, int d, const TestConfig& cfg);

struct SharedStress {
    int k_sh;
    long long gauss_rank;  // vd - k_sh * d
};
std::optional<SharedStress> k_sh_estimate(const Graph& g, int d, const TestConfig& cfg);

// Dimension of the span of all pairwise "dot products" <a_i, a_j> of a
// kernel basis of the stress matrix, as vectors indexed by edges.
int dot_space_dim(const Graph& g, const FpMatrix& stress_matrix);
int dot_space_dim_rational(const Graph& g, const RatMatrix& stress_matrix);
// Best observed dot-space dimension across rounds (same sampling as k_min).
std::optional<int> dot_space_estimate(const Graph& g, int d, const TestConfig& cfg);

struct HendricksonCheck {
    bool connectivity_ok = false;  // (d+1)-vertex-connected
    bool redundant_ok = false;     // still generically locally rigid after any single edge removal

    bool operator==(const HendricksonCheck&) const = default;
};
HendricksonCheck check_hendrickson(const Graph& g, int d, const TestConfig& cfg);

// Independent oracle for d = 1: generic global rigidity in E^1 is exactly
// 2-connectivity. Requires v >= 3.
bool check_dimension_one(const Graph& g);

}  // namespace rigidity

#endif
