#include "arcva/diffalg.hpp"

#include <algorithm>

#include "arcva/errors.hpp"

namespace arcva::diffalg {

DiffRing::DiffRing(std::vector<std::string> generator_names, std::vector<int> weights)
    : names_(std::move(generator_names)), weights_(std::move(weights)) {
    if (!weights_.empty() && weights_.size() != names_.size())
        throw Error("weight vector size mismatch");
}

std::optional<unsigned> DiffRing::generator_index(const std::string& name) const {
    for (unsigned j = 0; j < names_.size(); ++j)
        if (names_[j] == name) return j;
    return std::nullopt;
}

DiffPoly DiffPoly::constant(DiffRingPtr ring, const Scalar& c) {
    return {std::move(ring), Polynomial(c)};
}

DiffPoly DiffPoly::var(DiffRingPtr ring, unsigned gen, unsigned level) {
    return {std::move(ring), Polynomial::variable(encode({gen, level}))};
}

unsigned DiffPoly::max_level() const {
    unsigned m = 0;
    for (VarId v : p_.variables()) m = std::max(m, decode(v).level);
    return m;
}

namespace {
void check_same_ring(const DiffPoly& a, const DiffPoly& b) {
    if (a.ring() && b.ring() && a.ring() != b.ring())
        throw Error("DiffPoly ring mismatch");
}
}  // namespace

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
    check_same_ring(a, b);
    return {a.ring() ? a.ring() : b.ring(), a.poly() + b.poly()};
}
DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
    check_same_ring(a, b);
    return {a.ring() ? a.ring() : b.ring(), a.poly() - b.poly()};
}
DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    check_same_ring(a, b);
    return {a.ring() ? a.ring() : b.ring(), a.poly() * b.poly()};
}
DiffPoly operator*(const DiffPoly& a, const Scalar& c) { return {a.ring(), a.poly() * c}; }

DiffPoly apply_derivation(const DiffPoly& p, Level level) {
    Polynomial out;
    for (const auto& [m, c] : p.poly().terms()) {
        const auto& factors = m.factors();
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto [vid, e] = factors[i];
            DiffVar v = decode(vid);
            if (level && v.level > *level)
                throw LevelExceeded("variable level " + std::to_string(v.level) +
                                    " above truncation " + std::to_string(*level));
            if (level && v.level == *level) continue;  // D(y^(m)) = 0
            Monomial quot;
            m.divide(Monomial::var(vid), quot);
            out.add_term(quot * Monomial::var(encode({v.gen, v.level + 1})),
                         c * Scalar(static_cast<long>(e)));
        }
    }
    return {p.ring(), out};
}

DiffPoly prolong(const DiffPoly& f, unsigned i) {
    DiffPoly out = f;
    for (unsigned k = 0; k < i; ++k) out = apply_derivation(out, Unbounded);
    return out;
}

unsigned monomial_height(const Monomial& m) {
    unsigned h = 0;
    for (const auto& [vid, e] : m.factors()) h += decode(vid).level * e;
    return h;
}

int monomial_weight(const DiffRing& ring, const Monomial& m) {
    int w = 0;
    for (const auto& [vid, e] : m.factors()) {
        DiffVar v = decode(vid);
        w += static_cast<int>(e) * (ring.weight(v.gen) + static_cast<int>(v.level));
    }
    return w;
}

unsigned height_of(const DiffPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::optional<unsigned> h;
    for (const auto& [m, c] : p.poly().terms()) {
        unsigned hm = monomial_height(m);
        if (h && *h != hm) throw Inhomogeneous("mixed heights in DiffPoly");
        h = hm;
    }
    return *h;
}

int weight_of(const DiffPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (!p.ring() || !p.ring()->has_weights()) throw Error("ring carries no weights");
    std::optional<int> w;
    for (const auto& [m, c] : p.poly().terms()) {
        int wm = monomial_weight(*p.ring(), m);
        if (w && *w != wm) throw Inhomogeneous("mixed weights in DiffPoly");
        w = wm;
    }
    return *w;
}

bool is_height_homogeneous(const DiffPoly& p) {
    if (p.is_zero()) return true;
    std::optional<unsigned> h;
    for (const auto& [m, c] : p.poly().terms()) {
        unsigned hm = monomial_height(m);
        if (h && *h != hm) return false;
        h = hm;
    }
    return true;
}

std::vector<DiffPoly> jet_relations(const JetPresentation& p) {
    if (!p.level) throw Error("jet_relations needs a finite level; use JetRelationStream");
    std::vector<DiffPoly> out;
    for (unsigned i = 0; i <= *p.level; ++i)
        for (const auto& f : p.base_relations) out.push_back(prolong(f, i));
    return out;
}

JetRelationStream::JetRelationStream(JetPresentation p) : pres_(std::move(p)) {
    cache_.resize(pres_.base_relations.size());
    for (std::size_t ell = 0; ell < cache_.size(); ++ell)
        cache_[ell].push_back(pres_.base_relations[ell]);
}

DiffPoly JetRelationStream::at(std::size_t ell, unsigned i) {
    auto& row = cache_.at(ell);
    while (row.size() <= i) row.push_back(apply_derivation(row.back(), Unbounded));
    return row[i];
}

DiffPoly JetRelationStream::next() {
    std::size_t k = pres_.base_relations.size();
    DiffPoly r = at(pos_ % k, static_cast<unsigned>(pos_ / k));
    ++pos_;
    return r;
}

DiffSubstitution::DiffSubstitution(DiffRingPtr source, DiffRingPtr target,
                                   std::map<unsigned, DiffPoly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

const DiffPoly& DiffSubstitution::image(unsigned gen, unsigned level) const {
    auto it = images_.find(gen);
    if (it == images_.end())
        throw UnknownGenerator("no substitution image for generator '" +
                               source_->name(gen) + "'");
    auto& chain = derived_[gen];
    if (chain.empty()) chain.push_back(it->second);
    while (chain.size() <= level) chain.push_back(apply_derivation(chain.back(), Unbounded));
    return chain[level];
}

DiffPoly DiffSubstitution::operator()(const DiffPoly& p) const {
    DiffPoly out = DiffPoly::constant(target_, Scalar());
    for (const auto& [m, c] : p.poly().terms()) {
        DiffPoly term = DiffPoly::constant(target_, c);
        for (const auto& [vid, e] : m.factors()) {
            DiffVar v = decode(vid);
            if (v.gen >= source_->generator_count())
                throw UnknownGenerator("generator index out of range");
            const DiffPoly& img = image(v.gen, v.level);
            for (unsigned k = 0; k < e; ++k) term = term * img;
        }
        out = out + term;
    }
    return out;
}

MonomialOrder order_for(const std::vector<DiffPoly>& polys, MonomialOrder::Kind kind) {
    std::vector<VarId> vars;
    for (const auto& p : polys) {
        auto vs = p.poly().variables();
        vars.insert(vars.end(), vs.begin(), vs.end());
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    // priority: descending DiffVar order (largest variable first)
    std::reverse(vars.begin(), vars.end());
    return {kind, vars};
}

MonomialOrder default_order(const DiffPoly& sample, MonomialOrder::Kind kind,
                            const std::vector<const DiffPoly*>& more) {
    std::vector<DiffPoly> all{sample};
    for (const DiffPoly* p : more) all.push_back(*p);
    return order_for(all, kind);
}

}  // namespace arcva::diffalg
