#pragma once

#include <vector>

#include "arcva/scalar.hpp"

namespace arcva::exactpoly {

using Matrix = std::vector<std::vector<Scalar>>;

// exact basis of the right kernel {v : M v = 0}; empty for a trivial kernel
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

std::size_t rank(const Matrix& m);

// incremental row space, used for rank and span-membership queries
class RowSpace {
  public:
    explicit RowSpace(std::size_t ncols) : ncols_(ncols) {}

    // reduces v against the space; returns true (and absorbs it) if independent
    bool add(std::vector<Scalar> v);
    bool contains(std::vector<Scalar> v) const;
    std::size_t rank() const { return rows_.size(); }

  private:
    void reduce(std::vector<Scalar>& v) const;
    std::size_t ncols_;
    std::vector<std::vector<Scalar>> rows_;  // rref-ish: unit pivot, sorted by pivot col
    std::vector<std::size_t> pivots_;
};

}  // namespace arcva::exactpoly
