#pragma once

#include <Eigen/Dense>
#include <vector>

namespace subframe::cubature {

struct NnlsResult {
    Eigen::VectorXd alpha;
    double residual_inf = 0.0;
    std::vector<double> residual_history;
    int iterations = 0;
    bool converged = false;
};

// Sign-constrained least squares min ||A alpha - e|| s.t. alpha >= 0, solved
// as an active-set method warm-started from alpha0 (D15). Each round solves
// the least-norm correction on the free set through Tikhonov-damped normal
// equations (A_F A_F^T + damping I) y = e - A alpha, delta = A_F^T y, then
// clamps any coefficients the step drove negative. Bound variables re-enter
// when the residual gradient pulls them positive.
NnlsResult nnls_warm_start(const Eigen::MatrixXd& A, const Eigen::VectorXd& e,
                           const Eigen::VectorXd& alpha0, double damping = 1e-12,
                           double tol_inf = 1e-9, int max_outer = 40);

}  // namespace subframe::cubature
