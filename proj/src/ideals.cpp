#include "arcva/ideals.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "arcva/errors.hpp"

namespace arcva::ideals {

using diffalg::decode;
using diffalg::DiffRingPtr;
using exactpoly::Monomial;
using exactpoly::Polynomial;
using exactpoly::VarId;

void WorkBudget::charge() {
    if (++used > limit) throw BudgetExceeded(limit);
}

namespace {

// ---- dense working representation -----------------------------------------
// variables are arranged so that dense index 0 is the smallest variable of the
// order; grevlex then scans forward, lex scans backward

struct Ctx {
    std::vector<VarId> vars;            // by ascending priority
    std::map<VarId, std::size_t> index;
    MonomialOrder::Kind kind;
    std::vector<std::vector<int>> gradings;  // per grading: weight of each dense var
    std::vector<long> caps;                  // degree cap per grading

    std::size_t n() const { return vars.size(); }
};

using Exp = std::vector<unsigned>;

struct Term {
    Exp e;
    unsigned deg;
    Scalar c;
};

struct DPoly {
    std::vector<Term> t;  // sorted descending, leading first
    bool zero() const { return t.empty(); }
};

bool exp_greater(const Ctx& ctx, const Exp& a, unsigned da, const Exp& b, unsigned db) {
    if (ctx.kind == MonomialOrder::Kind::grevlex) {
        if (da != db) return da > db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

unsigned exp_deg(const Exp& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

long grading_deg(const std::vector<int>& g, const Exp& e) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * g[i];
    return d;
}

bool exp_divides(const Exp& a, const Exp& b) {  // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DPoly to_dense(const Ctx& ctx, const Polynomial& p) {
    DPoly out;
    for (const auto& [m, c] : p.terms()) {
        Term t;
        t.e.assign(ctx.n(), 0);
        for (const auto& [v, e] : m.factors()) t.e[ctx.index.at(v)] = e;
        t.deg = exp_deg(t.e);
        t.c = c;
        out.t.push_back(std::move(t));
    }
    std::sort(out.t.begin(), out.t.end(), [&](const Term& a, const Term& b) {
        return exp_greater(ctx, a.e, a.deg, b.e, b.deg);
    });
    return out;
}

Polynomial from_dense(const Ctx& ctx, const DPoly& p) {
    Polynomial out;
    for (const auto& t : p.t) {
        Monomial m;
        for (std::size_t i = 0; i < ctx.n(); ++i)
            if (t.e[i]) m = m * Monomial::var(ctx.vars[i], t.e[i]);
        out.add_term(m, t.c);
    }
    return out;
}

// r
//   += c * x^e * g
void add_scaled(const Ctx& ctx, DPoly& r, const Scalar& c, const Exp& e, const DPoly& g) {
    std::vector<Term> merged;
    merged.reserve(r.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    while (i < r.t.size() || j < g.t.size()) {
        if (j == g.t.size()) {
            merged.push_back(std::move(r.t[i++]));
            continue;
        }
        Term gt;
        gt.e = exp_add(g.t[j].e, e);
        gt.deg = g.t[j].deg + exp_deg(e);
        gt.c = g.t[j].c * c;
        if (i == r.t.size()) {
            merged.push_back(std::move(gt));
            ++j;
            continue;
        }
        if (r.t[i].e == gt.e) {
            Scalar s = r.t[i].c + gt.c;
            if (!s.is_zero()) {
                gt.c = s;
                merged.push_back(std::move(gt));
            }
            ++i, ++j;
        } else if (exp_greater(ctx, r.t[i].e, r.t[i].deg, gt.e, gt.deg)) {
            merged.push_back(std::move(r.t[i++]));
        } else {
            merged.push_back(std::move(gt));
            ++j;
        }
    }
    r.t = std::move(merged);
}

struct Reduction {
    DPoly remainder;
    std::vector<std::pair<std::size_t, DPoly>> cofactors;  // over basis indices
};

// full multivariate division of p by the current basis
Reduction reduce(const Ctx& ctx, DPoly p, const std::vector<DPoly>& basis, WorkBudget& budget,
                 bool track) {
    Reduction out;
    std::map<std::size_t, DPoly> cof;
    std::size_t cursor = 0;  // terms before cursor are in normal form
    while (cursor < p.t.size()) {
        const Term& lt = p.t[cursor];
        bool hit = false;
        for (std::size_t gi = 0; gi < basis.size(); ++gi) {
            const DPoly& g = basis[gi];
            if (exp_divides(g.t[0].e, lt.e)) {
                budget.charge();
                Exp q = exp_sub(lt.e, g.t[0].e);
                Scalar coef = lt.c / g.t[0].c;
                if (track) {
                    Term qt{q, exp_deg(q), coef};
                    DPoly& c = cof[gi];
                    DPoly single;
                    single.t.push_back(qt);
                    add_scaled(ctx, c, Scalar(1), Exp(ctx.n(), 0), single);
                }
                add_scaled(ctx, p, -coef, q, g);
                hit = true;
                break;
            }
        }
        if (!hit) ++cursor;
    }
    out.remainder = std::move(p);
    for (auto& [gi, c] : cof) out.cofactors.emplace_back(gi, std::move(c));
    return out;
}

struct Pair {
    unsigned deg;
    std::uint64_t seq;
    std::size_t i, j;
    Exp lcm;
};
struct PairGreater {
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg > b.deg;
        return a.seq > b.seq;
    }
};

}  // namespace

class Buchberger {
  public:
    Buchberger(const Ctx& ctx, std::vector<DPoly> gens, WorkBudget& budget, bool track)
        : ctx_(ctx), budget_(budget), track_(track), ngens_(gens.size()) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].zero()) continue;
            std::vector<DPoly> rep;
            if (track_) {
                rep.resize(ngens_);
                rep[i].t.push_back(Term{Exp(ctx_.n(), 0), 0, Scalar(1)});
            }
            add(std::move(gens[i]), std::move(rep));
        }
        run();
    }

    const std::vector<DPoly>& basis() const { return basis_; }
    const std::vector<std::vector<DPoly>>& reps() const { return reps_; }

    // p = sum cof_k * input_k + remainder
    std::pair<DPoly, std::vector<DPoly>> divide(DPoly p) {
        Reduction red = reduce(ctx_, std::move(p), basis_, budget_, track_);
        std::vector<DPoly> over_inputs(track_ ? ngens_ : 0);
        if (track_) {
            for (const auto& [gi, c] : red.cofactors)
                for (std::size_t k = 0; k < ngens_; ++k)
                    for (const auto& t : c.t)
                        if (!reps_[gi][k].zero())
                            add_scaled(ctx_, over_inputs[k], t.c, t.e, reps_[gi][k]);
        }
        return {std::move(red.remainder), std::move(over_inputs)};
    }

    // minimalize + tail-reduce; keeps representations in sync
    void interreduce() {
        // drop elements whose lead is divisible by another element's lead
        std::vector<bool> keep(basis_.size(), true);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = 0; j < basis_.size() && keep[i]; ++j) {
                if (i == j || !keep[j]) continue;
                if (exp_divides(basis_[j].t[0].e, basis_[i].t[0].e) &&
                    (basis_[j].t[0].e != basis_[i].t[0].e || j < i))
                    keep[i] = false;
            }
        std::vector<DPoly> kept;
        std::vector<std::vector<DPoly>> krep;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (keep[i]) {
                kept.push_back(std::move(basis_[i]));
                if (track_) krep.push_back(std::move(reps_[i]));
            }
        basis_ = std::move(kept);
        reps_ = std::move(krep);
        // tail reduction of each element against the others
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::vector<DPoly> others;
            std::vector<std::size_t> omap;
            for (std::size_t j = 0; j < basis_.size(); ++j)
                if (j != i) {
                    others.push_back(basis_[j]);
                    omap.push_back(j);
                }
            Reduction red = reduce(ctx_, std::move(basis_[i]), others, budget_, track_);
            basis_[i] = std::move(red.remainder);
            if (track_)
                for (const auto& [oi, c] : red.cofactors)
                    for (std::size_t k = 0; k < ngens_; ++k)
                        for (const auto& t : c.t)
                            if (!reps_[omap[oi]][k].zero())
                                add_scaled(ctx_, reps_[i][k], -t.c, t.e, reps_[omap[oi]][k]);
        }
        // monic
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            Scalar inv = basis_[i].t[0].c.inverse();
            for (auto& t : basis_[i].t) t.c *= inv;
            if (track_)
                for (auto& rp : reps_[i])
                    for (auto& t : rp.t) t.c *= inv;
        }
        std::sort(basis_.begin(), basis_.end(), [&](const DPoly& a, const DPoly& b) {
            return exp_greater(ctx_, b.t[0].e, b.t[0].deg, a.t[0].e, a.t[0].deg);
        });
    }

  private:
    void add(DPoly p, std::vector<DPoly> rep) {
        std::size_t ni = basis_.size();
        const Exp& lm = p.t[0].e;
        // Gebauer-Moeller style pruning of the new pair column
        std::vector<std::pair<std::size_t, Exp>> cand;
        for (std::size_t i = 0; i < ni; ++i) cand.emplace_back(i, exp_lcm(basis_[i].t[0].e, lm));
        std::vector<bool> drop(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a)
            for (std::size_t b = 0; b < cand.size() && !drop[a]; ++b) {
                if (a == b || drop[b]) continue;
                if (exp_divides(cand[b].second, cand[a].second) &&
                    (cand[b].second != cand[a].second || b < a))
                    drop[a] = true;
            }
        basis_.push_back(std::move(p));
        if (track_) reps_.push_back(std::move(rep));
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            auto [i, l] = cand[a];
            if (exp_add(basis_[i].t[0].e, lm) == l) continue;  // coprime leads
            bool over_cap = false;
            for (std::size_t gi = 0; gi < ctx_.gradings.size(); ++gi)
                if (grading_deg(ctx_.gradings[gi], l) > ctx_.caps[gi]) over_cap = true;
            if (over_cap) continue;
            pairs_.push(Pair{exp_deg(l), seq_++, i, ni, std::move(l)});
        }
    }

    void run() {
        while (!pairs_.empty()) {
            Pair pr = pairs_.top();
            pairs_.pop();
            budget_.charge();
            const DPoly& f = basis_[pr.i];
            const DPoly& g = basis_[pr.j];
            Exp qf = exp_sub(pr.lcm, f.t[0].e);
            Exp qg = exp_sub(pr.lcm, g.t[0].e);
            DPoly s;
            add_scaled(ctx_, s, f.t[0].c.inverse(), qf, f);
            add_scaled(ctx_, s, -(g.t[0].c.inverse()), qg, g);
            if (s.zero()) continue;
            std::vector<DPoly> srep;
            if (track_) {
                srep.resize(ngens_);
                for (std::size_t k = 0; k < ngens_; ++k) {
                    if (!reps_[pr.i][k].zero())
                        add_scaled(ctx_, srep[k], f.t[0].c.inverse(), qf, reps_[pr.i][k]);
                    if (!reps_[pr.j][k].zero())
                        add_scaled(ctx_, srep[k], -(g.t[0].c.inverse()), qg, reps_[pr.j][k]);
                }
            }
            Reduction red = reduce(ctx_, std::move(s), basis_, budget_, track_);
            if (red.remainder.zero()) continue;
            if (track_)
                for (const auto& [gi, c] : red.cofactors)
                    for (std::size_t k = 0; k < ngens_; ++k)
                        for (const auto& t : c.t)
                            if (!reps_[gi][k].zero())
                                add_scaled(ctx_, srep[k], -t.c, t.e, reps_[gi][k]);
            add(std::move(red.remainder), std::move(srep));
        }
    }

    const Ctx& ctx_;
    WorkBudget& budget_;
    bool track_;
    std::size_t ngens_;
    std::vector<DPoly> basis_;
    std::vector<std::vector<DPoly>> reps_;
    std::priority_queue<Pair, std::vector<Pair>, PairGreater> pairs_;
    std::uint64_t seq_ = 0;
};

namespace {

Ctx make_ctx(const std::vector<DiffPoly>& gens, const DiffPoly* query,
             const MonomialOrder& order, bool with_caps) {
    Ctx ctx;
    ctx.kind = order.kind;
    // ascending priority = reverse of the order's priority list
    ctx.vars.assign(order.priority.rbegin(), order.priority.rend());
    for (std::size_t i = 0; i < ctx.vars.size(); ++i) ctx.index[ctx.vars[i]] = i;
    if (!with_caps || !query || query->is_zero()) return ctx;

    DiffRingPtr ring;
    for (const auto& g : gens)
        if (g.ring()) ring = g.ring();

    auto try_grading = [&](const std::vector<int>& weights) {
        auto poly_homogeneous = [&](const Polynomial& p) {
            std::optional<long> d;
            for (const auto& [m, c] : p.terms()) {
                long dm = 0;
                for (const auto& [v, e] : m.factors())
                    dm += static_cast<long>(e) * weights[ctx.index.at(v)];
                if (d && *d != dm) return false;
                d = dm;
            }
            return true;
        };
        for (const auto& g : gens)
            if (!g.is_zero() && !poly_homogeneous(g.poly())) return;
        long cap = 0;
        for (const auto& [m, c] : query->poly().terms()) {
            long dm = 0;
            for (const auto& [v, e] : m.factors())
                dm += static_cast<long>(e) * weights[ctx.index.at(v)];
            cap = std::max(cap, dm);
        }
        ctx.gradings.push_back(weights);
        ctx.caps.push_back(cap);
    };

    std::vector<int> height(ctx.n());
    for (std::size_t i = 0; i < ctx.n(); ++i)
        height[i] = static_cast<int>(decode(ctx.vars[i]).level);
    try_grading(height);
    if (ring && ring->has_weights()) {
        std::vector<int> wt(ctx.n());
        for (std::size_t i = 0; i < ctx.n(); ++i) {
            auto dv = decode(ctx.vars[i]);
            wt[i] = ring->weight(dv.gen) + static_cast<int>(dv.level);
        }
        try_grading(wt);
    }
    return ctx;
}

MonomialOrder full_order(const std::vector<DiffPoly>& gens, const DiffPoly* query,
                         MonomialOrder::Kind kind) {
    std::vector<DiffPoly> all = gens;
    if (query) all.push_back(*query);
    return diffalg::order_for(all, kind);
}

// append any missing variables at the lowest priority; this leaves the order's
// restriction to the original variables unchanged for both lex and grevlex
MonomialOrder extend_order(MonomialOrder order, const std::vector<DiffPoly>& polys) {
    for (const auto& p : polys)
        for (VarId v : p.poly().variables())
            if (std::find(order.priority.begin(), order.priority.end(), v) ==
                order.priority.end())
                order.priority.push_back(v);
    return order;
}

DiffRingPtr ring_of(const std::vector<DiffPoly>& gens, const DiffPoly* query) {
    for (const auto& g : gens)
        if (g.ring()) return g.ring();
    if (query) return query->ring();
    return nullptr;
}

}  // namespace

GroebnerBasis groebner_basis(const std::vector<DiffPoly>& gens, const MonomialOrder& order,
                             std::uint64_t budget) {
    WorkBudget wb{budget, 0};
    MonomialOrder ord = extend_order(order, gens);
    Ctx ctx = make_ctx(gens, nullptr, ord, false);
    std::vector<DPoly> dense;
    for (const auto& g : gens)
        if (!g.is_zero()) dense.push_back(to_dense(ctx, g.poly()));
    Buchberger engine(ctx, std::move(dense), wb, true);
    engine.interreduce();
    GroebnerBasis out;
    out.order_ = ord;
    out.reduced_ = true;
    out.input_ = gens;
    DiffRingPtr ring = ring_of(gens, nullptr);
    for (std::size_t i = 0; i < engine.basis().size(); ++i) {
        out.gens_.emplace_back(ring, from_dense(ctx, engine.basis()[i]));
        std::vector<DiffPoly> rep;
        for (const auto& r : engine.reps()[i]) rep.emplace_back(ring, from_dense(ctx, r));
        out.reps_.push_back(std::move(rep));
    }
    return out;
}

DiffPoly normal_form(const DiffPoly& p, const GroebnerBasis& g, std::uint64_t budget) {
    WorkBudget wb{budget, 0};
    std::vector<DiffPoly> all = g.generators();
    MonomialOrder order = extend_order(g.order(), {p});
    Ctx ctx = make_ctx(all, nullptr, order, false);
    std::vector<DPoly> dense;
    for (const auto& e : all) dense.push_back(to_dense(ctx, e.poly()));
    DPoly q = to_dense(ctx, p.poly());
    Reduction red = reduce(ctx, std::move(q), dense, wb, false);
    return {p.ring() ? p.ring() : ring_of(all, nullptr), from_dense(ctx, red.remainder)};
}

DiffPoly MembershipCertificate::recombine() const {
    DiffPoly sum;
    for (const auto& [g, c] : cofactors) sum = sum + g * c;
    return sum;
}

std::optional<MembershipCertificate> ideal_member(const DiffPoly& p,
                                                  const std::vector<DiffPoly>& gens,
                                                  const GroebnerOptions& opt) {
    if (p.is_zero()) return MembershipCertificate{};
    WorkBudget wb{opt.budget, 0};
    MonomialOrder order = full_order(gens, &p, opt.kind);
    Ctx ctx = make_ctx(gens, &p, order, true);
    std::vector<DPoly> dense;
    for (const auto& g : gens)
        if (!g.is_zero()) dense.push_back(to_dense(ctx, g.poly()));
    Buchberger engine(ctx, std::move(dense), wb, true);
    auto [rem, cof] = engine.divide(to_dense(ctx, p.poly()));
    if (!rem.zero()) return std::nullopt;
    MembershipCertificate cert;
    std::size_t k = 0;
    DiffRingPtr ring = ring_of(gens, &p);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        cert.cofactors.emplace_back(g, DiffPoly(ring, from_dense(ctx, cof[k])));
        ++k;
    }
    return cert;
}

std::optional<unsigned> nilpotency_order(const DiffPoly& p, const std::vector<DiffPoly>& gens,
                                         unsigned kmax, const GroebnerOptions& opt) {
    DiffPoly power = p;
    for (unsigned k = 1; k <= kmax; ++k) {
        if (ideal_member(power, gens, opt)) return k;
        power = power * p;
    }
    return std::nullopt;
}

std::vector<DiffPoly> arc_truncation(const JetPresentation& pres, unsigned height) {
    JetPresentation trunc{pres.ring, pres.base_relations, height};
    return jet_relations(trunc);
}

std::optional<MembershipCertificate> arc_member(const DiffPoly& p, const JetPresentation& pres,
                                                const GroebnerOptions& opt) {
    if (p.is_zero()) return MembershipCertificate{};
    if (!diffalg::is_height_homogeneous(p))
        throw Inhomogeneous("arc_member needs a height-homogeneous element");
    unsigned h = diffalg::height_of(p);
    return ideal_member(p, arc_truncation(pres, h), opt);
}

}  // namespace arcva::ideals
