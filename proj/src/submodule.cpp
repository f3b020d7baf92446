#include "yangian/submodule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace yangian {

namespace {

CycVec flatten(const CycMat& m) {
    CycVec v(m.order(), m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.at(r * m.cols() + c) = m.at(r, c);
    return v;
}

const CalibrationResult& calibrated() {
    static const CalibrationResult result = calibrate();
    return result;
}

}  // namespace

Echelon::Echelon(unsigned order, std::size_t width) : order_(order), width_(width) {}

void Echelon::reduce(CycVec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Cyc& c = v.at(pivots_[r]);
        if (c.is_zero()) continue;
        const Cyc factor = c;  // pivot entries are 1, so the factor is the coordinate itself
        for (std::size_t j = pivots_[r]; j < width_; ++j) {
            if (rows_[r].at(j).is_zero()) continue;
            v.at(j) = v.at(j) - factor * rows_[r].at(j);
        }
    }
}

bool Echelon::insert(CycVec v) {
    if (v.dim() != width_) throw std::invalid_argument("echelon width mismatch");
    reduce(v);

    std::size_t pivot = width_;
    for (std::size_t j = 0; j < width_; ++j) {
        if (!v.at(j).is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot == width_) return false;

    const Cyc scale = v.at(pivot).inv();
    for (std::size_t j = pivot; j < width_; ++j) v.at(j) = v.at(j) * scale;

    // Clear the new pivot column from existing rows to stay in RREF.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Cyc factor = rows_[r].at(pivot);
        if (factor.is_zero()) continue;
        for (std::size_t j = pivot; j < width_; ++j) {
            if (v.at(j).is_zero()) continue;
            rows_[r].at(j) = rows_[r].at(j) - factor * v.at(j);
        }
    }

    const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool Echelon::contains(CycVec v) const {
    reduce(v);
    return v.is_zero();
}

bool Echelon::operator==(const Echelon& o) const {
    return width_ == o.width_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

Echelon submodule_closure(const TensorModule& mod, const CycVec& seed) {
    if (seed.is_zero()) throw std::invalid_argument("submodule closure needs a nonzero seed");
    const auto ops = mod.generator_actions();

    Echelon span(kSl3Order, TensorModule::dim);
    span.insert(seed);
    std::vector<CycVec> frontier = {seed};
    while (!frontier.empty()) {
        std::vector<CycVec> next;
        for (const auto& v : frontier) {
            for (const auto& op : ops) {
                CycVec image = op * v;
                if (span.insert(image)) next.push_back(std::move(image));
            }
        }
        frontier = std::move(next);
    }
    return span;
}

std::size_t burnside_dimension(const TensorModule& mod) {
    const auto ops = mod.generator_actions();
    const std::size_t full = TensorModule::dim * TensorModule::dim;

    Echelon span(kSl3Order, full);
    std::vector<CycMat> frontier;
    for (const auto& op : ops)
        if (span.insert(flatten(op))) frontier.push_back(op);

    while (!frontier.empty() && span.rank() < full) {
        std::vector<CycMat> next;
        for (const auto& x : frontier) {
            for (const auto& g : ops) {
                CycMat product = x * g;
                if (span.insert(flatten(product))) next.push_back(std::move(product));
                if (span.rank() == full) return full;
            }
        }
        frontier = std::move(next);
    }
    return span.rank();
}

IrreducibilityVerdict irreducibility(const TensorModule& mod, const EntangledBasis& basis) {
    IrreducibilityVerdict verdict{};
    verdict.algebra_dim = burnside_dimension(mod);
    verdict.irreducible = verdict.algebra_dim == TensorModule::dim * TensorModule::dim;
    if (verdict.irreducible) return verdict;

    std::vector<Echelon> distinct_proper;
    for (unsigned k = 1; k <= 3; ++k) {
        for (unsigned m = 1; m <= 3; ++m) {
            Echelon closure = submodule_closure(mod, basis.psi(k, m));
            const bool proper = closure.rank() < TensorModule::dim;
            verdict.seed_closures.push_back({k, m, closure.rank(), proper});
            if (!proper) continue;
            if (std::find(distinct_proper.begin(), distinct_proper.end(), closure) ==
                distinct_proper.end())
                distinct_proper.push_back(std::move(closure));
        }
    }
    for (const auto& sub : distinct_proper) verdict.proper_dims.push_back(sub.rank());
    std::sort(verdict.proper_dims.begin(), verdict.proper_dims.end());
    return verdict;
}

IrreducibilityVerdict irreducibility(const TensorModule& mod) {
    return irreducibility(mod, EntangledBasis(calibrated().convention));
}

std::string to_string(const IrreducibilityVerdict& v) {
    if (v.irreducible) return "Irreducible";
    std::ostringstream out;
    out << "Reducible(";
    for (std::size_t i = 0; i < v.proper_dims.size(); ++i)
        out << (i ? ", " : "") << "dim " << v.proper_dims[i];
    out << ")";
    return out.str();
}

}  // namespace yangian
