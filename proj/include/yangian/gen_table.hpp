// Truncated Yangian generator tables.
//
// A table holds, for each level m <= depth and each residue pair (i, j), the
// matrix of one generator acting on a fixed module. Level 0 is pinned by the
// series conventions and cannot be overwritten:
//   Cartan-Weyl:  T_{ij}^{(0)} = delta_{ij} * I
//   principal:    S_{kl}^{(0)} = delta_{k0} delta_{l0} * I
#pragma once

#include <cstdint>
#include <vector>

#include "yangian/matrix.hpp"

namespace yangian {

enum class Presentation { CartanWeyl, Principal };

class GenTable {
  public:
    GenTable(Presentation pres, unsigned order, unsigned depth, std::size_t dim);

    Presentation presentation() const { return pres_; }
    unsigned order() const { return order_; }
    unsigned depth() const { return depth_; }
    std::size_t dim() const { return dim_; }

    // i, j are residues (any integers, reduced mod order).
    const CycMat& at(long i, long j, unsigned level) const;
    void set(long i, long j, unsigned level, CycMat value);

    bool operator==(const GenTable& o) const;
    bool operator!=(const GenTable& o) const { return !(*this == o); }

    GenTable operator*(const Rat& s) const;  // scales levels >= 1 only
    GenTable operator+(const GenTable& o) const;

    // Deterministic pseudo-random table: entries have small integer and
    // half/third-integer coordinates. Same seed, same table, bit for bit.
    static GenTable random(Presentation pres, unsigned order, unsigned depth,
                           std::size_t dim, std::uint64_t seed);

  private:
    std::size_t index(long i, long j, unsigned level) const;

    Presentation pres_;
    unsigned order_;
    unsigned depth_;
    std::size_t dim_;
    std::vector<CycMat> entries_;
};

}  // namespace yangian
