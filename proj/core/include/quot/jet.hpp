#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "quot/errors.hpp"
#include "quot/rational.hpp"

namespace quot {

// Ordered list of auxiliary formal variables with per-variable truncation
// caps. Shared by every Jet built over it.
struct JetContext {
    std::vector<std::string> vars;
    std::vector<int> caps;
};

using JetCtx = std::shared_ptr<const JetContext>;

JetCtx make_jet_context(std::vector<std::string> vars, std::vector<int> caps);

// Truncated multivariate polynomial over Rat, modulo the per-variable caps of
// its context. A Jet with a null context is a plain constant and unifies with
// any context on demand.
class Jet {
  public:
    Jet() = default;
    explicit Jet(Rat c);
    explicit Jet(long c) : Jet(Rat(c)) {}
    Jet(JetCtx ctx, Rat c);
    static Jet variable(const JetCtx& ctx, std::size_t index);

    const JetCtx& ctx() const { return ctx_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_unit() const; // constant Rat term nonzero
    Rat constant_term() const;
    Rat coeff(const std::vector<int>& exps) const;

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend bool operator==(const Jet& a, const Jet& b);

    Jet scale(const Rat& c) const;
    Jet inverse() const; // requires is_unit()
    Jet pow(long k) const;

    // Full substitution of numeric values for all context variables. The
    // caller is responsible for caps being high enough that no term was
    // truncated away.
    Rat eval(const std::vector<Rat>& values) const;

    // Divide every term by var^k; throws if some term has a smaller exponent.
    Jet shift_var_down(std::size_t index, int k) const;

  private:
    JetCtx ctx_;
    std::map<std::vector<int>, Rat> terms_; // keys sized to ctx vars; no zero values

    void prune();
    static JetCtx unify(const JetCtx& a, const JetCtx& b);
    friend struct Ring<Jet>;
};

template <>
struct Ring<Jet> {
    static Jet zero(const Jet& proto) { return Jet(proto.ctx(), Rat(0)); }
    static Jet one(const Jet& proto) { return Jet(proto.ctx(), Rat(1)); }
    static bool is_zero(const Jet& x) { return x.is_zero(); }
    static bool is_unit(const Jet& x) { return x.is_unit(); }
    static Jet inv(const Jet& x) { return x.inverse(); }
    static Jet scale(const Jet& x, const Rat& c) { return x.scale(c); }
    static Rat constant_part(const Jet& x) { return x.constant_term(); }
    static std::string str(const Jet& x);
};

} // namespace quot
