#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arcva/diffalg.hpp"

namespace arcva::ideals {

using diffalg::DiffPoly;
using diffalg::JetPresentation;
using exactpoly::MonomialOrder;
using exactpoly::Scalar;

struct WorkBudget {
    std::uint64_t limit = 10'000'000;  // reduction steps
    std::uint64_t used = 0;
    void charge();
};

struct GroebnerOptions {
    MonomialOrder::Kind kind = MonomialOrder::Kind::grevlex;
    std::uint64_t budget = 10'000'000;
};

class GroebnerBasis {
  public:
    const std::vector<DiffPoly>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }
    bool reduced() const { return reduced_; }
    // representations of each basis element over the original input generators
    const std::vector<std::vector<DiffPoly>>& representations() const { return reps_; }
    const std::vector<DiffPoly>& input() const { return input_; }

  private:
    friend GroebnerBasis groebner_basis(const std::vector<DiffPoly>&, const MonomialOrder&,
                                        std::uint64_t);
    std::vector<DiffPoly> gens_;
    std::vector<std::vector<DiffPoly>> reps_;
    std::vector<DiffPoly> input_;
    MonomialOrder order_;
    bool reduced_ = false;
};

// reduced Groebner basis of the input ideal (full, untruncated)
GroebnerBasis groebner_basis(const std::vector<DiffPoly>& gens, const MonomialOrder& order,
                             std::uint64_t budget = 10'000'000);

// unique remainder of multivariate division by a Groebner basis
DiffPoly normal_form(const DiffPoly& p, const GroebnerBasis& g,
                     std::uint64_t budget = 10'000'000);

struct MembershipCertificate {
    // pairs (generator, cofactor); sum of products recombines to the element
    std::vector<std::pair<DiffPoly, DiffPoly>> cofactors;
    DiffPoly recombine() const;
};

// Decides p in <gens>. On success the certificate recombines to p exactly.
// When every generator (and p) is homogeneous for the height grading and/or a
// ring weight grading, Buchberger pairs above the query's degree are pruned;
// for graded ideals this cannot change the verdict at or below that degree.
std::optional<MembershipCertificate> ideal_member(const DiffPoly& p,
                                                  const std::vector<DiffPoly>& gens,
                                                  const GroebnerOptions& opt = {});

// smallest k <= kmax with p^k in <gens>, or nullopt
std::optional<unsigned> nilpotency_order(const DiffPoly& p, const std::vector<DiffPoly>& gens,
                                         unsigned kmax, const GroebnerOptions& opt = {});

// membership of a height-homogeneous element in the full arc ideal of an
// unbounded presentation, reduced to the finite truncation at its height
std::optional<MembershipCertificate> arc_member(const DiffPoly& p, const JetPresentation& pres,
                                                const GroebnerOptions& opt = {});

// generators actually used by arc_member for a height-h query
std::vector<DiffPoly> arc_truncation(const JetPresentation& pres, unsigned height);

}  // namespace arcva::ideals
