// Exact invariant-subspace machinery for the 9-dimensional tensor module:
// reduced-row-echelon spans over Q(w_3), closure of a seed vector under the
// 16 generator actions, and the Burnside irreducibility test (the action
// matrices generate the full 81-dimensional matrix algebra iff the module
// is irreducible).
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "yangian/entangled.hpp"
#include "yangian/matrix.hpp"
#include "yangian/sl3.hpp"

namespace yangian {

// A subspace kept in reduced row echelon form: rows are sorted by pivot
// column, every pivot entry is 1 and is the only nonzero entry in its
// column. The RREF basis of a subspace is unique, so two Echelon objects
// describe the same subspace iff their rows compare equal.
class Echelon {
  public:
    Echelon(unsigned order, std::size_t width);

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<CycVec>& rows() const { return rows_; }

    // Inserts v's residual after reduction against the current rows;
    // returns false (and changes nothing) when v already lies in the span.
    bool insert(CycVec v);
    bool contains(CycVec v) const;

    bool operator==(const Echelon& o) const;
    bool operator!=(const Echelon& o) const { return !(*this == o); }

  private:
    void reduce(CycVec& v) const;

    unsigned order_;
    std::size_t width_;
    std::vector<std::size_t> pivots_;  // strictly increasing, parallel to rows_
    std::vector<CycVec> rows_;
};

// Smallest subspace containing seed and closed under all 16 generator
// actions of the module; rejects a zero seed. Rows come back in canonical
// RREF order.
Echelon submodule_closure(const TensorModule& mod, const CycVec& seed);

// Exact dimension of the associative algebra generated by the 16 action
// matrices, computed by closing the span under right multiplication by the
// generators; stops early once the full 81-dimensional algebra is reached.
std::size_t burnside_dimension(const TensorModule& mod);

struct SeedClosure {
    unsigned k, m;        // entangled-basis label of the seed
    std::size_t dim;      // closure dimension
    bool proper;          // 0 < dim < 9
};

struct IrreducibilityVerdict {
    bool irreducible;
    std::size_t algebra_dim;                // 81 iff irreducible
    std::vector<SeedClosure> seed_closures; // 9 entries when reducible, else empty
    std::vector<std::size_t> proper_dims;   // dims of the distinct proper closures
};

// Burnside test; when reducible, also runs submodule_closure from each of
// the 9 entangled basis vectors and deduplicates the resulting subspaces.
IrreducibilityVerdict irreducibility(const TensorModule& mod, const EntangledBasis& basis);

// Same, with the basis taken at the calibrated convention (computed once
// per process).
IrreducibilityVerdict irreducibility(const TensorModule& mod);

// "Irreducible" or "Reducible(dim d, ...)" listing the distinct proper dims.
std::string to_string(const IrreducibilityVerdict& v);

}  // namespace yangian
