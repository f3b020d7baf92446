// Bivariate polynomials in formal variables u, v with matrix coefficients.
//
// This is the carrier for denominator-cleared operator identities: both sides
// of a rational identity in u, v are multiplied by the product of the
// denominators, and the difference must vanish coefficient-by-coefficient.
#pragma once

#include <cstddef>
#include <vector>

#include "yangian/matrix.hpp"

namespace yangian {

class BiPolyMat {
  public:
    // Zero polynomial with room for degrees (deg_u, deg_v).
    BiPolyMat(unsigned order, std::size_t dim, std::size_t deg_u, std::size_t deg_v);

    // Degree-(0,0) polynomial equal to a constant matrix.
    static BiPolyMat constant(CycMat m);
    // c * u^{pu} * v^{pv}.
    static BiPolyMat monomial(CycMat c, std::size_t pu, std::size_t pv);

    unsigned order() const { return order_; }
    std::size_t dim() const { return dim_; }
    std::size_t deg_u() const { return du_; }
    std::size_t deg_v() const { return dv_; }

    const CycMat& coeff(std::size_t pu, std::size_t pv) const;
    CycMat& coeff(std::size_t pu, std::size_t pv);

    bool is_zero() const;

    BiPolyMat operator+(const BiPolyMat& o) const;
    BiPolyMat operator-(const BiPolyMat& o) const;
    BiPolyMat operator*(const BiPolyMat& o) const;  // convolution product

  private:
    unsigned order_;
    std::size_t dim_, du_, dv_;
    std::vector<CycMat> c_;  // (du_+1) x (dv_+1) grid, row-major in u-degree
};

}  // namespace yangian
