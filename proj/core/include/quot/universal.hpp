#pragma once

#include <optional>
#include <vector>

#include "quot/root_engine.hpp"

namespace quot {

// Genus family selector. KTheory carries one rank per auxiliary jet variable
// y_s; Verlinde/Segre carry a single rank. Cobordism/RawPair carry an explicit
// genus series payload and are consumed by cobordism_series, not by
// universal_bundle.
enum class Family { KTheory, Verlinde, Segre, Cobordism, RawPair };

struct GenusSpec {
    Family family = Family::KTheory;
    long N = 1;
    std::vector<long> ranks;               // negative ranks allowed
    std::optional<Series<Jet>> genus_g;    // Cobordism / RawPair only
    std::vector<Series<Jet>> genus_f;      // RawPair only

    static GenusSpec ktheory(long N, std::vector<long> ranks) {
        return {Family::KTheory, N, std::move(ranks), std::nullopt, {}};
    }
    static GenusSpec verlinde(long N, long r) {
        return {Family::Verlinde, N, {r}, std::nullopt, {}};
    }
    static GenusSpec segre(long N, long r) {
        return {Family::Segre, N, {r}, std::nullopt, {}};
    }
    static GenusSpec cobordism(Series<Jet> g) {
        return {Family::Cobordism, 1, {}, std::move(g), {}};
    }

    long ell() const { return static_cast<long>(ranks.size()); }
    void validate() const;
};

// Exponents attached to one slot of a length-N decomposition.
struct SlotExponents {
    long biK = 0;
    std::vector<long> biC1;  // one entry per class alpha_s

    bool is_zero() const {
        if (biK != 0)
            return false;
        for (long c : biC1)
            if (c != 0)
                return false;
        return true;
    }
    friend bool operator==(const SlotExponents&, const SlotExponents&) = default;
};

// Exponent data of one decomposition: per-slot (beta_i.K, beta_i.c1(alpha_s))
// plus the pair exponents beta_i.beta_j. Only three shapes are supported;
// anything else raises UnsupportedPattern.
struct ExponentPattern {
    std::vector<SlotExponents> slots;       // size N
    std::vector<std::vector<long>> bibj;    // N x N symmetric, diagonal ignored

    enum class Shape { AllZero, SingleActive, AllEqual };

    // Classifies the pattern; for SingleActive, `active` is set to the index
    // of the unique slot with nonzero exponents.
    Shape classify(std::size_t& active) const;

    static ExponentPattern zero(long N, long ell);
    static ExponentPattern single(long N, long ell, SlotExponents part);
    static ExponentPattern equal(long N, SlotExponents part, long pair_exponent);
};

// The universal data of one genus family at one truncation: the degree-N root
// block, the symmetric series A and B_s, and per-root templates for U, V, W
// whose symmetric combinations are evaluated through the quotient ring.
struct UniversalBundle {
    static Series<Jet> unset() { return Series<Jet>::zeroes(0, 1, Jet(Rat(0))); }

    GenusSpec spec;
    JetCtx ctx;                          // null when no jet variables are used
    MonicSeriesPoly<Jet> block;          // monic block carrying the N roots
    ZPoly<Jet> cofactor;                 // remaining factor of the full relation
    Series<Jet> discprod = unset();      // prod_{i != j} (z_i - z_j)
    Series<Jet> block_at_one = unset();  // prod_i (1 - z_i)
    Series<Jet> A = unset();
    std::vector<Series<Jet>> B;          // one per class alpha_s
    Series<Jet> u_scalar = unset();      // U_i = u_scalar * u_expr(z_i)
    RootExpr<Jet> u_expr;
    std::vector<RootExpr<Jet>> v_expr;   // V_{i,s} = v_expr[s](z_i)
    Series<Jet> w_pair_prod = unset();   // prod_{i<j} W_{ij}

    long N() const { return block.N; }

    // sum_i U_i^{biK} prod_s V_{i,s}^{biC1_s}  (the single-active pattern).
    Series<Jet> sum_over_roots(const SlotExponents& e) const;

    // prod_i U_i^{biK} prod_{i,s} V_{i,s}^{biC1_s} * (prod_{i<j} W_{ij})^{bb}
    // (the all-equal pattern).
    Series<Jet> product_over_roots(const SlotExponents& e, long pair_exponent) const;

    // The symmetric U/V/W combination for one supported pattern, summed over
    // one representative assignment orbit (slot multiplicities are the
    // caller's bookkeeping).
    Series<Jet> pattern_value(const ExponentPattern& pattern) const;
};

// The full change-of-variable relation G(z, q) = 0 whose degree-N block at
// z = 0 carries the roots z_i. Coefficients live over `ctx` (pass nullptr for
// Verlinde/Segre).
ZPoly<Jet> change_poly(const GenusSpec& spec, const JetCtx& ctx, long trunc);

UniversalBundle universal_bundle(const GenusSpec& spec, const JetCtx& ctx, long trunc);

// Taylor coefficient of prod_s y_s^{k_s} at y = 0, i.e. the mixed partial
// divided by prod k_s!.
Series<Rat> y_derivative(const Series<Jet>& a, const std::vector<int>& orders);

} // namespace quot
