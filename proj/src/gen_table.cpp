#include "yangian/gen_table.hpp"

#include <random>
#include <stdexcept>

#include "yangian/principal.hpp"

namespace yangian {

GenTable::GenTable(Presentation pres, unsigned order, unsigned depth, std::size_t dim)
    : pres_(pres), order_(order), depth_(depth), dim_(dim),
      entries_((static_cast<std::size_t>(depth) + 1) * order * order,
               CycMat(order, dim, dim)) {
    if (order < 2) throw std::invalid_argument("table order must be >= 2");
    // level-0 convention
    const CycMat id = CycMat::identity(order, dim);
    if (pres_ == Presentation::CartanWeyl) {
        for (unsigned i = 0; i < order; ++i) entries_[index(i, i, 0)] = id;
    } else {
        entries_[index(0, 0, 0)] = id;
    }
}

std::size_t GenTable::index(long i, long j, unsigned level) const {
    if (level > depth_) throw std::out_of_range("generator level exceeds table depth");
    const unsigned ri = residue(i, order_), rj = residue(j, order_);
    return (static_cast<std::size_t>(level) * order_ + ri) * order_ + rj;
}

const CycMat& GenTable::at(long i, long j, unsigned level) const {
    return entries_[index(i, j, level)];
}

void GenTable::set(long i, long j, unsigned level, CycMat value) {
    if (level == 0)
        throw std::invalid_argument("level-0 entries are fixed by the series convention");
    if (value.order() != order_ || value.rows() != dim_ || value.cols() != dim_)
        throw std::invalid_argument("entry shape mismatch");
    entries_[index(i, j, level)] = std::move(value);
}

bool GenTable::operator==(const GenTable& o) const {
    return pres_ == o.pres_ && order_ == o.order_ && depth_ == o.depth_ &&
           dim_ == o.dim_ && entries_ == o.entries_;
}

GenTable GenTable::operator*(const Rat& s) const {
    GenTable out(pres_, order_, depth_, dim_);
    for (unsigned m = 1; m <= depth_; ++m)
        for (unsigned i = 0; i < order_; ++i)
            for (unsigned j = 0; j < order_; ++j)
                out.set(i, j, m, at(i, j, m) * s);
    return out;
}

GenTable GenTable::operator+(const GenTable& o) const {
    if (pres_ != o.pres_ || order_ != o.order_ || depth_ != o.depth_ || dim_ != o.dim_)
        throw std::invalid_argument("table shape mismatch");
    GenTable out(pres_, order_, depth_, dim_);
    for (unsigned m = 1; m <= depth_; ++m)
        for (unsigned i = 0; i < order_; ++i)
            for (unsigned j = 0; j < order_; ++j)
                out.set(i, j, m, at(i, j, m) + o.at(i, j, m));
    return out;
}

GenTable GenTable::random(Presentation pres, unsigned order, unsigned depth,
                          std::size_t dim, std::uint64_t seed) {
    GenTable t(pres, order, depth, dim);
    std::mt19937_64 rng(seed);
    // modulo reduction keeps the stream implementation-independent, unlike
    // uniform_int_distribution
    auto draw = [&rng](std::uint64_t m) { return static_cast<long>(rng() % m); };
    for (unsigned m = 1; m <= depth; ++m)
        for (unsigned i = 0; i < order; ++i)
            for (unsigned j = 0; j < order; ++j) {
                CycMat mat(order, dim, dim);
                for (std::size_t r = 0; r < dim; ++r)
                    for (std::size_t c = 0; c < dim; ++c) {
                        const long num = draw(19) - 9;            // -9..9
                        const long den = 1 + draw(3);             // 1..3
                        const long root = draw(order);            // power of w
                        if (num == 0) continue;
                        mat.at(r, c) = Cyc::root(order, root) * rat(num, den);
                    }
                t.set(i, j, m, std::move(mat));
            }
    return t;
}

}  // namespace yangian
