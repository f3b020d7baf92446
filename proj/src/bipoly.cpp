#include "yangian/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace yangian {

BiPolyMat::BiPolyMat(unsigned order, std::size_t dim, std::size_t deg_u, std::size_t deg_v)
    : order_(order), dim_(dim), du_(deg_u), dv_(deg_v),
      c_((deg_u + 1) * (deg_v + 1), CycMat(order, dim, dim)) {}

BiPolyMat BiPolyMat::constant(CycMat m) {
    BiPolyMat p(m.order(), m.rows(), 0, 0);
    p.coeff(0, 0) = std::move(m);
    return p;
}

BiPolyMat BiPolyMat::monomial(CycMat c, std::size_t pu, std::size_t pv) {
    BiPolyMat p(c.order(), c.rows(), pu, pv);
    p.coeff(pu, pv) = std::move(c);
    return p;
}

const CycMat& BiPolyMat::coeff(std::size_t pu, std::size_t pv) const {
    if (pu > du_ || pv > dv_) throw std::out_of_range("coefficient degree out of range");
    return c_[pu * (dv_ + 1) + pv];
}

CycMat& BiPolyMat::coeff(std::size_t pu, std::size_t pv) {
    if (pu > du_ || pv > dv_) throw std::out_of_range("coefficient degree out of range");
    return c_[pu * (dv_ + 1) + pv];
}

bool BiPolyMat::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const CycMat& m) { return m.is_zero(); });
}

BiPolyMat BiPolyMat::operator+(const BiPolyMat& o) const {
    if (order_ != o.order_ || dim_ != o.dim_)
        throw std::invalid_argument("polynomial shape mismatch");
    BiPolyMat out(order_, dim_, std::max(du_, o.du_), std::max(dv_, o.dv_));
    for (std::size_t a = 0; a <= du_; ++a)
        for (std::size_t b = 0; b <= dv_; ++b) out.coeff(a, b) += coeff(a, b);
    for (std::size_t a = 0; a <= o.du_; ++a)
        for (std::size_t b = 0; b <= o.dv_; ++b) out.coeff(a, b) += o.coeff(a, b);
    return out;
}

BiPolyMat BiPolyMat::operator-(const BiPolyMat& o) const {
    if (order_ != o.order_ || dim_ != o.dim_)
        throw std::invalid_argument("polynomial shape mismatch");
    BiPolyMat out(order_, dim_, std::max(du_, o.du_), std::max(dv_, o.dv_));
    for (std::size_t a = 0; a <= du_; ++a)
        for (std::size_t b = 0; b <= dv_; ++b) out.coeff(a, b) += coeff(a, b);
    for (std::size_t a = 0; a <= o.du_; ++a)
        for (std::size_t b = 0; b <= o.dv_; ++b) out.coeff(a, b) -= o.coeff(a, b);
    return out;
}

BiPolyMat BiPolyMat::operator*(const BiPolyMat& o) const {
    if (order_ != o.order_ || dim_ != o.dim_)
        throw std::invalid_argument("polynomial shape mismatch");
    BiPolyMat out(order_, dim_, du_ + o.du_, dv_ + o.dv_);
    for (std::size_t a = 0; a <= du_; ++a)
        for (std::size_t b = 0; b <= dv_; ++b) {
            if (coeff(a, b).is_zero()) continue;
            for (std::size_t a2 = 0; a2 <= o.du_; ++a2)
                for (std::size_t b2 = 0; b2 <= o.dv_; ++b2) {
                    if (o.coeff(a2, b2).is_zero()) continue;
                    out.coeff(a + a2, b + b2) += coeff(a, b) * o.coeff(a2, b2);
                }
        }
    return out;
}

}  // namespace yangian
