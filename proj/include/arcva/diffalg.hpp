#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arcva/poly.hpp"

namespace arcva::diffalg {

using exactpoly::Monomial;
using exactpoly::MonomialOrder;
using exactpoly::Polynomial;
using exactpoly::Scalar;
using exactpoly::VarId;

// jet variable y_j^(i): generator index j, level i
struct DiffVar {
    unsigned gen;
    unsigned level;
    bool operator==(const DiffVar&) const = default;
};

// DiffVars are totally ordered by (generator index, level); the VarId encoding
// makes the natural integer order agree with that.
inline VarId encode(DiffVar v) { return (v.gen << 16) | v.level; }
inline DiffVar decode(VarId id) { return {id >> 16, id & 0xffffu}; }

// symbol table: generator names plus optional integer conformal weights
// (weights feed the graded truncation in module ideals and the map Phi)
class DiffRing {
  public:
    DiffRing(std::vector<std::string> generator_names, std::vector<int> weights = {});

    std::size_t generator_count() const { return names_.size(); }
    const std::string& name(unsigned gen) const { return names_.at(gen); }
    std::optional<unsigned> generator_index(const std::string& name) const;
    bool has_weights() const { return !weights_.empty(); }
    int weight(unsigned gen) const { return weights_.at(gen); }

  private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using DiffRingPtr = std::shared_ptr<const DiffRing>;

// polynomial in jet variables over a named ring
class DiffPoly {
  public:
    DiffPoly() = default;
    DiffPoly(DiffRingPtr ring, Polynomial p) : ring_(std::move(ring)), p_(std::move(p)) {}
    static DiffPoly constant(DiffRingPtr ring, const Scalar& c);
    static DiffPoly var(DiffRingPtr ring, unsigned gen, unsigned level);

    const DiffRingPtr& ring() const { return ring_; }
    const Polynomial& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    unsigned max_level() const;

    friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const DiffPoly& a, const Scalar& c);
    DiffPoly operator-() const { return {ring_, -p_}; }
    DiffPoly pow(unsigned k) const { return {ring_, p_.pow(k)}; }
    bool operator==(const DiffPoly& o) const { return p_ == o.p_; }
    bool operator!=(const DiffPoly& o) const { return !(*this == o); }

  private:
    DiffRingPtr ring_;
    Polynomial p_;
};

// level m, or unbounded (the arc ring)
using Level = std::optional<unsigned>;
inline constexpr std::nullopt_t Unbounded = std::nullopt;

// Leibniz extension of D(y^(i)) = y^(i+1), with D(y^(m)) = 0 at a truncation
// level m. Throws LevelExceeded if p mentions a variable above m.
DiffPoly apply_derivation(const DiffPoly& p, Level level = Unbounded);

// D^i(f) for a level-0 polynomial f (unbounded mode)
DiffPoly prolong(const DiffPoly& f, unsigned i);

// height grading: ht(y^(i)) = i; throws ZeroPolynomial / Inhomogeneous
unsigned height_of(const DiffPoly& p);
// height of a monomial under the same grading
unsigned monomial_height(const Monomial& m);
// conformal weight of a monomial: wt(y_j^(i)) = wt_j + i (ring must carry weights)
int monomial_weight(const DiffRing& ring, const Monomial& m);
// weight of a weight-homogeneous DiffPoly; throws on zero or mixed weights
int weight_of(const DiffPoly& p);
bool is_height_homogeneous(const DiffPoly& p);

// base-ring presentation plus truncation level
struct JetPresentation {
    DiffRingPtr ring;
    std::vector<DiffPoly> base_relations;  // in level-0 variables only
    Level level = Unbounded;
};

// level m: {prolong(f_l, i) : 0 <= i <= m}, grouped i-major
std::vector<DiffPoly> jet_relations(const JetPresentation& p);

// unbounded: lazy stream of f_1^(0), ..., f_k^(0), f_1^(1), ...
class JetRelationStream {
  public:
    explicit JetRelationStream(JetPresentation p);
    DiffPoly next();
    DiffPoly at(std::size_t ell, unsigned i);

  private:
    JetPresentation pres_;
    std::vector<std::vector<DiffPoly>> cache_;  // cache_[ell][i]
    std::size_t pos_ = 0;
};

// differential substitution: each level-0 generator of the source maps to a
// DiffPoly over the target ring; level-i variables map to D^i of the image
class DiffSubstitution {
  public:
    DiffSubstitution(DiffRingPtr source, DiffRingPtr target,
                     std::map<unsigned, DiffPoly> images);

    const DiffRingPtr& source() const { return source_; }
    const DiffRingPtr& target() const { return target_; }

    DiffPoly operator()(const DiffPoly& p) const;

  private:
    const DiffPoly& image(unsigned gen, unsigned level) const;
    DiffRingPtr source_, target_;
    std::map<unsigned, DiffPoly> images_;
    mutable std::map<unsigned, std::vector<DiffPoly>> derived_;
};

// default monomial order for a ring: variables ordered by (gen, level), the
// largest DiffVar being the largest variable
MonomialOrder default_order(const DiffPoly& sample_or_gens, MonomialOrder::Kind kind,
                            const std::vector<const DiffPoly*>& more = {});
MonomialOrder order_for(const std::vector<DiffPoly>& polys, MonomialOrder::Kind kind);

}  // namespace arcva::diffalg
