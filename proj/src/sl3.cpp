#include "yangian/sl3.hpp"

#include <stdexcept>

#include "yangian/principal.hpp"

namespace yangian {

namespace {

// Gauss-Jordan inverse over the field Q(w_3); used once, on the 8x8 Gram
// matrix of the trace form, which is invertible (the form is nondegenerate).
std::vector<std::vector<Cyc>> invert(std::vector<std::vector<Cyc>> m) {
    const std::size_t k = m.size();
    std::vector<std::vector<Cyc>> inv(k, std::vector<Cyc>(k, Cyc::zero(kSl3Order)));
    for (std::size_t i = 0; i < k; ++i) inv[i][i] = Cyc::one(kSl3Order);

    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col].is_zero()) ++pivot;
        if (pivot == k) throw std::domain_error("singular Gram matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);

        const Cyc scale = m[col][col].inv();
        for (std::size_t j = 0; j < k; ++j) {
            m[col][j] = m[col][j] * scale;
            inv[col][j] = inv[col][j] * scale;
        }
        for (std::size_t row = 0; row < k; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            const Cyc factor = m[row][col];
            for (std::size_t j = 0; j < k; ++j) {
                m[row][j] = m[row][j] - factor * m[col][j];
                inv[row][j] = inv[row][j] - factor * inv[col][j];
            }
        }
    }
    return inv;
}

Sl3Basis build_basis() {
    const unsigned n = kSl3Order;
    auto E = [&](unsigned i, unsigned j) { return unit_E(n, i, j); };

    Sl3Basis basis;
    basis.names = {"H1", "H2", "E12", "E13", "E21", "E23", "E31", "E32"};
    basis.elements = {
        E(1, 1) - E(2, 2), E(2, 2) - E(3, 3), E(1, 2), E(1, 3),
        E(2, 1),           E(2, 3),           E(3, 1), E(3, 2),
    };

    const std::size_t k = basis.elements.size();
    std::vector<std::vector<Cyc>> gram(k, std::vector<Cyc>(k, Cyc::zero(n)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            gram[i][j] = trace_form(basis.elements[i], basis.elements[j]);

    // x^j = sum_i (G^{-1})_{ij} x_i  gives  (x_i | x^j) = delta_ij.
    const auto ginv = invert(gram);
    basis.duals.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        CycMat dual(n, n, n);
        for (std::size_t i = 0; i < k; ++i) dual += basis.elements[i] * ginv[i][j];
        basis.duals.push_back(std::move(dual));
    }
    return basis;
}

// Second tensor leg carries the contragredient action x -> -x^T.
CycMat contragredient(const CycMat& x) { return x.transpose() * Rat(-1); }

}  // namespace

const Sl3Basis& sl3_basis() {
    static const Sl3Basis basis = build_basis();
    return basis;
}

CycMat EvalModule::act(const CycMat& x) const {
    return kind == ModuleKind::Fundamental ? x : contragredient(x);
}

TensorModule::TensorModule(Rat a, Rat b, Rat casimir_constant)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(casimir_constant)),
      omega_(kSl3Order, dim, dim) {
    const auto& basis = sl3_basis();
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        omega_ += basis.elements[i].kron(contragredient(basis.duals[i]));
}

CycMat TensorModule::I_action(const CycMat& x) const {
    const CycMat id = CycMat::identity(kSl3Order, 3);
    return x.kron(id) + id.kron(contragredient(x));
}

CycMat TensorModule::J_action(const CycMat& x) const {
    const CycMat id = CycMat::identity(kSl3Order, 3);
    const CycMat left = x.kron(id);
    return left * a_ + id.kron(contragredient(x)) * b_ + commutator(left, omega_) * c_;
}

std::vector<CycMat> TensorModule::generator_actions() const {
    const auto& basis = sl3_basis();
    std::vector<CycMat> ops;
    ops.reserve(2 * basis.elements.size());
    for (const auto& x : basis.elements) ops.push_back(I_action(x));
    for (const auto& x : basis.elements) ops.push_back(J_action(x));
    return ops;
}

CycMat principal_T(unsigned i, unsigned j) {
    if (i < 1 || i > 3 || j < 1 || j > 3)
        throw std::out_of_range("principal_T: indices must lie in 1..3");
    if (i == 1 && j == 1)
        throw std::invalid_argument("principal_T: (1,1) is the identity direction, not in sl(3)");
    return principal_A(kSl3Order, static_cast<long>(i) - 1, static_cast<long>(j) - 1) *
           Cyc::root(kSl3Order, 4 - static_cast<long>(i));
}

}  // namespace yangian
