#include "yangian/matrix.hpp"

#include <stdexcept>

namespace yangian {

CycMat::CycMat(unsigned order, std::size_t rows, std::size_t cols)
    : order_(order), rows_(rows), cols_(cols),
      e_(rows * cols, Cyc::zero(order)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("empty matrix shape");
}

CycMat CycMat::identity(unsigned order, std::size_t d) {
    CycMat m(order, d, d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = Cyc::one(order);
    return m;
}

void CycMat::check_shape(const CycMat& o) const {
    if (order_ != o.order_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape or field order mismatch");
}

bool CycMat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

CycMat CycMat::operator-() const {
    CycMat out(order_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
    return out;
}

CycMat& CycMat::operator+=(const CycMat& o) {
    check_shape(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!o.e_[i].is_zero()) e_[i] += o.e_[i];
    return *this;
}

CycMat& CycMat::operator-=(const CycMat& o) {
    check_shape(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!o.e_[i].is_zero()) e_[i] -= o.e_[i];
    return *this;
}

CycMat CycMat::operator*(const CycMat& o) const {
    if (order_ != o.order_ || cols_ != o.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    CycMat out(order_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Cyc& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Cyc& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

CycMat CycMat::operator*(const Cyc& s) const {
    CycMat out(order_, rows_, cols_);
    if (s.is_zero()) return out;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].is_zero()) out.e_[i] = e_[i] * s;
    return out;
}

CycMat CycMat::operator*(const Rat& s) const { return *this * Cyc::from_rat(order_, s); }

bool CycMat::operator==(const CycMat& o) const {
    return order_ == o.order_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Cyc CycMat::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    Cyc t = Cyc::zero(order_);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

CycMat CycMat::transpose() const {
    CycMat out(order_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

CycMat CycMat::kron(const CycMat& o) const {
    if (order_ != o.order_) throw std::invalid_argument("field order mismatch in kron");
    CycMat out(order_, rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Cyc& a = at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l) {
                    const Cyc& b = o.at(k, l);
                    if (b.is_zero()) continue;
                    out.at(i * o.rows_ + k, j * o.cols_ + l) = a * b;
                }
        }
    return out;
}

CycVec::CycVec(unsigned order, std::size_t dim)
    : order_(order), e_(dim, Cyc::zero(order)) {
    if (dim == 0) throw std::invalid_argument("empty vector");
}

bool CycVec::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

CycVec CycVec::operator-() const {
    CycVec out(order_, e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
    return out;
}

CycVec& CycVec::operator+=(const CycVec& o) {
    if (order_ != o.order_ || e_.size() != o.e_.size())
        throw std::invalid_argument("vector shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!o.e_[i].is_zero()) e_[i] += o.e_[i];
    return *this;
}

CycVec& CycVec::operator-=(const CycVec& o) {
    if (order_ != o.order_ || e_.size() != o.e_.size())
        throw std::invalid_argument("vector shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!o.e_[i].is_zero()) e_[i] -= o.e_[i];
    return *this;
}

CycVec CycVec::operator*(const Cyc& s) const {
    CycVec out(order_, e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].is_zero()) out.e_[i] = e_[i] * s;
    return out;
}

bool CycVec::operator==(const CycVec& o) const {
    return order_ == o.order_ && e_ == o.e_;
}

Cyc CycVec::dot(const CycVec& o) const {
    if (order_ != o.order_ || e_.size() != o.e_.size())
        throw std::invalid_argument("vector shape mismatch");
    Cyc acc = Cyc::zero(order_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].is_zero() && !o.e_[i].is_zero()) acc += e_[i] * o.e_[i];
    return acc;
}

Cyc CycVec::inner(const CycVec& o) const {
    if (order_ != o.order_ || e_.size() != o.e_.size())
        throw std::invalid_argument("vector shape mismatch");
    Cyc acc = Cyc::zero(order_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].is_zero() && !o.e_[i].is_zero()) acc += e_[i].conj() * o.e_[i];
    return acc;
}

CycVec operator*(const CycMat& m, const CycVec& v) {
    if (m.order() != v.order() || m.cols() != v.dim())
        throw std::invalid_argument("matrix-vector shape mismatch");
    CycVec out(m.order(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Cyc& a = m.at(i, j);
            if (a.is_zero() || v.at(j).is_zero()) continue;
            out.at(i) += a * v.at(j);
        }
    return out;
}

nlohmann::ordered_json to_json(const CycMat& m) {
    nlohmann::ordered_json j;
    j["order"] = m.order();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

CycMat mat_from_json(const nlohmann::json& j) {
    const unsigned order = j.at("order").get<unsigned>();
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    CycMat m(order, rows, cols);
    const auto& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("row count mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
        if (entries[r].size() != cols) throw std::invalid_argument("column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = cyc_from_json(entries[r][c]);
    }
    return m;
}

}  // namespace yangian
