// Dense matrices and vectors over a fixed cyclotomic field Q(w_n).
//
// Products skip zero entries, which keeps sweeps over the principal basis
// fast: those matrices have one nonzero entry per row, so a product costs
// O(d^2) zero tests plus O(d) field multiplications instead of O(d^3).
#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "yangian/cyclotomic.hpp"

namespace yangian {

class CycMat {
  public:
    CycMat(unsigned order, std::size_t rows, std::size_t cols);
    static CycMat identity(unsigned order, std::size_t d);

    unsigned order() const { return order_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Cyc& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Cyc& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    CycMat operator-() const;
    CycMat& operator+=(const CycMat& o);
    CycMat& operator-=(const CycMat& o);
    friend CycMat operator+(CycMat a, const CycMat& b) { return a += b; }
    friend CycMat operator-(CycMat a, const CycMat& b) { return a -= b; }
    CycMat operator*(const CycMat& o) const;
    CycMat operator*(const Cyc& s) const;
    CycMat operator*(const Rat& s) const;
    bool operator==(const CycMat& o) const;
    bool operator!=(const CycMat& o) const { return !(*this == o); }

    Cyc trace() const;
    CycMat transpose() const;
    CycMat kron(const CycMat& o) const;

  private:
    void check_shape(const CycMat& o) const;

    unsigned order_;
    std::size_t rows_, cols_;
    std::vector<Cyc> e_;  // row-major
};

inline CycMat commutator(const CycMat& a, const CycMat& b) { return a * b - b * a; }

class CycVec {
  public:
    CycVec(unsigned order, std::size_t dim);

    unsigned order() const { return order_; }
    std::size_t dim() const { return e_.size(); }
    const Cyc& at(std::size_t i) const { return e_[i]; }
    Cyc& at(std::size_t i) { return e_[i]; }

    bool is_zero() const;
    CycVec operator-() const;
    CycVec& operator+=(const CycVec& o);
    CycVec& operator-=(const CycVec& o);
    friend CycVec operator+(CycVec a, const CycVec& b) { return a += b; }
    friend CycVec operator-(CycVec a, const CycVec& b) { return a -= b; }
    CycVec operator*(const Cyc& s) const;
    bool operator==(const CycVec& o) const;
    bool operator!=(const CycVec& o) const { return !(*this == o); }

    // Bilinear pairing sum_i u_i v_i (no conjugation).
    Cyc dot(const CycVec& o) const;
    // Hermitian pairing sum_i conj(u_i) v_i.
    Cyc inner(const CycVec& o) const;

  private:
    unsigned order_;
    std::vector<Cyc> e_;
};

CycVec operator*(const CycMat& m, const CycVec& v);

// Dump format: {"order", "rows", "cols", "entries": [[Cyc...]]}.
nlohmann::ordered_json to_json(const CycMat& m);
CycMat mat_from_json(const nlohmann::json& j);

}  // namespace yangian
