#pragma once

#include <array>
#include <vector>

#include "quot/universal.hpp"

namespace quot {

struct SurfaceNumbers {
    long K2 = 0;   // K_X^2
    long chiO = 1; // chi(O_X)
};

struct KClassNumbers {
    long rank = 0;
    long c1K = 0;  // c1 . K
    long c1sq = 0; // c1^2
    long c2 = 0;
};

// chi = rank*chi(O) + (c1^2 - c1.K)/2 - c2.
Rat chi_hrr(const SurfaceNumbers& surface, const KClassNumbers& cls);

// One summand of a length-N class decomposition: its Seiberg-Witten weight
// and the intersection numbers carried by that part.
struct DecompPart {
    Rat sw = Rat(1);
    long biK = 0;              // beta_i . K
    std::vector<long> biC1;    // beta_i . c1(alpha_s)
};

// A multiset of N parts plus the pair intersections beta_i . beta_j; the
// assembler sums over all distinct orderings of the parts.
struct Decomposition {
    std::vector<DecompPart> parts;
    std::vector<std::vector<long>> bibj; // may be empty for all-zero pairings
};

// The full invariant series
//   q^{-beta.K} * sum_decomp prod SW * A^{K^2} prod_s B_s^{c1(alpha_s).K}
//                 * (symmetric U/V/W value of the decomposition's pattern),
// returned with jet coefficients over ctx (pass nullptr when no jets).
Series<Jet> assemble_invariant(const GenusSpec& spec, const JetCtx& ctx,
                               const SurfaceNumbers& surface,
                               const std::vector<KClassNumbers>& classes,
                               const std::vector<Decomposition>& decomps, long trunc);

// Convenience: assemble and extract the prod y_s^{k_s} jet coefficient.
Series<Rat> assemble_wedge(const GenusSpec& spec, const SurfaceNumbers& surface,
                           const std::vector<KClassNumbers>& classes,
                           const std::vector<Decomposition>& decomps,
                           const std::vector<int>& orders, long trunc);

enum class ClosedForm {
    taut0,
    taut1,
    taut2,
    taut3,
    taut4,
    ee,
    eef,
    zbarpg,
    egl_nonvirtual,
    rank1_chi0,
    rank1_chi1,
};

struct ClosedFormParams {
    long N = 1;
    long K2 = 0;
    long c1K = 0;
    long rank = 0;
    long r = 0;       // exterior-power twist rank (ee)
    long betaC1 = 0;  // beta . c1(alpha)
    long nu = 0;
    long chiO = 1;
    Rat sw = Rat(1);
    Rat chiAlpha = Rat(0);
    Rat chiKinvAlpha = Rat(0); // chi(K^{-1} x alpha)
};

Series<Rat> closed_form(ClosedForm name, const ClosedFormParams& p, long trunc);

// W(q, y) = q (1+qy)^{chiM} / (1-q)^{chiO} * sum_k q^k (-y)^k (chi(k) + y chi(k+1))
// where chi(k) = chi(M^k x alphaTilde) = chiMk[0] + chiMk[1] k + chiMk[2] k^2.
// y may be any jet (a constant, or a shifted variable for derivatives at -1).
Series<Jet> prop_ppp_W(long chiO, long chiM, const std::array<Rat, 3>& chiMk, const Jet& y,
                       long trunc);

// Geometry of the N=1, p_g = 0 shifted series: all pairings of the curve
// class beta against K and c1(alpha).
struct Pg0Input {
    SurfaceNumbers surface; // chiO must be 1
    KClassNumbers alpha;
    long betaK = 0;
    long beta2 = 0;
    long c1aBeta = 0; // c1(alpha) . beta
};

long pg0_nu(const Pg0Input& in); // (beta^2 - beta.K)/2, validated

// The shifted series Zbar = Z1 + Z2 + Z3 (Z3 via the nu-th y-derivative of W
// at y = -1, taken with jets in s = y + 1).
Series<Rat> pg0_series(const Pg0Input& in, long trunc);

// The three summands, for reporting and testing.
struct Pg0Split {
    Series<Rat> Z1, Z2, Z3;
};
Pg0Split pg0_split(const Pg0Input& in, long trunc);

// Virtual Segre/Verlinde comparison: verlinde(q) vs segre((-1)^N q) for the
// same geometric input. A discrepancy is data, not an error.
struct SvReport {
    bool equal = false;
    long firstDiscrepancy = 0; // q-power, valid when !equal
    Rat lhs, rhs;              // coefficients at the discrepancy
    Series<Rat> verlinde;
    Series<Rat> segre_rescaled;
};
SvReport sv_check(long N, long r, const SurfaceNumbers& surface, const KClassNumbers& cls,
                  const std::vector<Decomposition>& decomps, long trunc);

// The two series of the degree/rank symmetry, assembled from the degree-N
// block of z^N (1-z)^r = q and the degree-r block of z^r (1-z)^N = q.
struct SymmetryResult {
    Series<Rat> Mstar, Nstar;   // from the degree-N block
    Series<Rat> Mtilde, Ntilde; // from the degree-r block
    Series<Rat> pairProduct;    // prod_{i,j} (1 - H_i - Htilde_j)
    Series<Rat> lhs, rhs;       // M^{K2} N^{mu} both ways
    bool equal = false;
};
SymmetryResult symmetry_series(long N, long r, long mu, long K2, long trunc);

// Rank-1 quotient series data: the two implicit roots u, v and the localized
// contributions Eplus/Eminus (jets in t = 1 - y).
struct Rank1Data {
    Series<Jet> u = UniversalBundle::unset();
    Series<Jet> v = UniversalBundle::unset();
    Series<Jet> Eplus = UniversalBundle::unset();
    Series<Jet> Eminus = UniversalBundle::unset();
};
Rank1Data rank1_data(long K2, const JetCtx& ctx, long trunc);

// chi in {0, 1}: the assembled rank-1 invariant series.
Series<Rat> rank1_series(long chi, long K2, long trunc);

} // namespace quot
