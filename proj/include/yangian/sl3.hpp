// The Lie algebra sl(3) over Q(w_3) and the 9-dimensional tensor module
// carrying the level-zero and level-one Yangian actions.
//
// Module = (vector module at parameter a) (x) (its contragredient at b):
//   I(x) = x (x) 1 + 1 (x) xbar          with xbar = -x^T on the second leg,
//   J(x) = a (x (x) 1) + b (1 (x) xbar) + c [x (x) 1, Omega],
// where Omega = sum_beta x_beta (x) xbar^beta over trace-form dual bases.
// The constant c is fixed by calibration (see entangled.hpp); Omega acts as
// 1/3 on the adjoint summand and -8/3 on the invariant line.
#pragma once

#include <string>
#include <vector>

#include "yangian/matrix.hpp"

namespace yangian {

inline constexpr unsigned kSl3Order = 3;  // ambient field Q(w_3)

struct Sl3Basis {
    std::vector<std::string> names;  // H1, H2, E12, E13, E21, E23, E31, E32
    std::vector<CycMat> elements;
    std::vector<CycMat> duals;  // trace-form duals, (x_i | x^j) = delta_ij
};

const Sl3Basis& sl3_basis();

enum class ModuleKind { Fundamental, Dual };

struct EvalModule {
    ModuleKind kind;
    Rat parameter;  // evaluation point: level-one action is parameter * level-zero

    CycMat act(const CycMat& x) const;  // x itself, or -x^T for the dual kind
};

class TensorModule {
  public:
    TensorModule(Rat a, Rat b, Rat casimir_constant);

    static constexpr std::size_t dim = 9;

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Rat& casimir_constant() const { return c_; }
    const CycMat& omega() const { return omega_; }

    CycMat I_action(const CycMat& x) const;
    CycMat J_action(const CycMat& x) const;

    // The 16 generator matrices {I(x), J(x)} over the fixed sl(3) basis, in
    // a deterministic order (all I's, then all J's).
    std::vector<CycMat> generator_actions() const;

  private:
    Rat a_, b_, c_;
    CycMat omega_;
};

// The shifted principal family on 3x3 matrices: w^{4-i} A_{i-1, j-1} for
// (i, j) in {1,2,3}^2 minus (1,1); equals fixed combinations of the
// Chevalley generators (the eight dictionary identities under test).
CycMat principal_T(unsigned i, unsigned j);

}  // namespace yangian
