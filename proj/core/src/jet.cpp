#include "quot/jet.hpp"

#include <sstream>

namespace quot {

JetCtx make_jet_context(std::vector<std::string> vars, std::vector<int> caps) {
    if (vars.size() != caps.size())
        throw Error("jet context: vars/caps size mismatch");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (caps[i] < 0)
            throw Error("jet context: negative cap");
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw Error("jet context: duplicate variable " + vars[i]);
    }
    auto c = std::make_shared<JetContext>();
    c->vars = std::move(vars);
    c->caps = std::move(caps);
    return c;
}

Jet::Jet(Rat c) {
    if (sgn(c) != 0)
        terms_.emplace(std::vector<int>{}, std::move(c));
}

Jet::Jet(JetCtx ctx, Rat c) : ctx_(std::move(ctx)) {
    if (sgn(c) != 0)
        terms_.emplace(std::vector<int>(ctx_ ? ctx_->vars.size() : 0, 0), std::move(c));
}

Jet Jet::variable(const JetCtx& ctx, std::size_t index) {
    if (!ctx || index >= ctx->vars.size())
        throw Error("jet variable: bad index");
    Jet j;
    j.ctx_ = ctx;
    if (ctx->caps[index] >= 1) {
        std::vector<int> e(ctx->vars.size(), 0);
        e[index] = 1;
        j.terms_.emplace(std::move(e), Rat(1));
    }
    return j;
}

bool Jet::is_unit() const {
    return sgn(constant_term()) != 0;
}

Rat Jet::constant_term() const {
    for (const auto& [e, v] : terms_) {
        bool allz = true;
        for (int x : e)
            if (x != 0) {
                allz = false;
                break;
            }
        if (allz)
            return v;
    }
    return Rat(0);
}

Rat Jet::coeff(const std::vector<int>& exps) const {
    std::vector<int> key = exps;
    if (!ctx_) {
        for (int x : exps)
            if (x != 0)
                return Rat(0);
        key.clear();
    } else if (exps.size() != ctx_->vars.size()) {
        throw Error("jet coeff: exponent arity mismatch");
    }
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
}

JetCtx Jet::unify(const JetCtx& a, const JetCtx& b) {
    if (!a)
        return b;
    if (!b || a == b)
        return a;
    if (a->vars == b->vars && a->caps == b->caps)
        return a;
    throw Error("jet: mixing distinct contexts");
}

namespace {
// Lift a term map onto a (possibly wider) context.
std::map<std::vector<int>, Rat> lift(const std::map<std::vector<int>, Rat>& terms,
                                     std::size_t arity) {
    std::map<std::vector<int>, Rat> out;
    for (const auto& [e, v] : terms) {
        if (e.size() == arity)
            out.emplace(e, v);
        else
            out.emplace(std::vector<int>(arity, 0), v);
    }
    return out;
}
} // namespace

void Jet::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& [e, v] : r.terms_)
        v = -v;
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    JetCtx c = unify(ctx_, o.ctx_);
    std::size_t arity = c ? c->vars.size() : 0;
    auto mine = lift(terms_, arity);
    for (const auto& [e, v] : lift(o.terms_, arity))
        mine[e] += v;
    ctx_ = c;
    terms_ = std::move(mine);
    prune();
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    return *this += -o;
}

Jet operator*(const Jet& a, const Jet& b) {
    JetCtx c = Jet::unify(a.ctx_, b.ctx_);
    std::size_t arity = c ? c->vars.size() : 0;
    auto ta = lift(a.terms_, arity), tb = lift(b.terms_, arity);
    Jet r;
    r.ctx_ = c;
    for (const auto& [ea, va] : ta)
        for (const auto& [eb, vb] : tb) {
            std::vector<int> e(arity);
            bool keep = true;
            for (std::size_t i = 0; i < arity; ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > c->caps[i]) {
                    keep = false;
                    break;
                }
            }
            if (keep)
                r.terms_[e] += va * vb;
        }
    r.prune();
    return r;
}

bool operator==(const Jet& a, const Jet& b) {
    Jet d = a;
    d -= b;
    return d.is_zero();
}

Jet Jet::scale(const Rat& c) const {
    if (sgn(c) == 0)
        return Jet(ctx_, Rat(0));
    Jet r = *this;
    for (auto& [e, v] : r.terms_)
        v *= c;
    return r;
}

Jet Jet::inverse() const {
    Rat c = constant_term();
    if (sgn(c) == 0)
        throw DivisionByNonUnit("jet with zero constant term");
    long total = 0;
    if (ctx_)
        for (int cap : ctx_->caps)
            total += cap;
    // a = c(1 - u) with u nilpotent of order <= total+1: Neumann series.
    Jet u = Jet(ctx_, Rat(1)) - scale(Ring<Rat>::inv(c));
    Jet acc(ctx_, Rat(1)), pw(ctx_, Rat(1));
    for (long k = 1; k <= total; ++k) {
        pw = pw * u;
        if (pw.is_zero())
            break;
        acc += pw;
    }
    return acc.scale(Ring<Rat>::inv(c));
}

Jet Jet::pow(long k) const {
    if (k < 0)
        return inverse().pow(-k);
    Jet acc(ctx_, Rat(1)), base = *this;
    while (k > 0) {
        if (k & 1)
            acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Rat Jet::eval(const std::vector<Rat>& values) const {
    std::size_t arity = ctx_ ? ctx_->vars.size() : 0;
    if (values.size() != arity)
        throw Error("jet eval: value arity mismatch");
    Rat acc(0);
    for (const auto& [e, v] : terms_) {
        Rat t = v;
        for (std::size_t i = 0; i < e.size(); ++i)
            t *= rat_pow(values[i], e[i]);
        acc += t;
    }
    return acc;
}

Jet Jet::shift_var_down(std::size_t index, int k) const {
    if (!ctx_ || index >= ctx_->vars.size())
        throw Error("jet shift: bad variable index");
    Jet r;
    r.ctx_ = ctx_;
    for (const auto& [e, v] : terms_) {
        if (e[index] < k)
            throw DivisionByNonUnit("jet shift: term below requested power of " +
                                    ctx_->vars[index]);
        std::vector<int> ne = e;
        ne[index] -= k;
        r.terms_.emplace(std::move(ne), v);
    }
    return r;
}

std::string Ring<Jet>::str(const Jet& x) {
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : x.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << rat_str(v);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                os << "*" << x.ctx()->vars[i] << "^" << e[i];
    }
    return os.str();
}

} // namespace quot
