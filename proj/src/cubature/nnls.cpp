#include "subframe/cubature/nnls.hpp"

namespace subframe::cubature {

NnlsResult nnls_warm_start(const Eigen::MatrixXd& A, const Eigen::VectorXd& e,
                           const Eigen::VectorXd& alpha0, double damping, double tol_inf,
                           int max_outer) {
    const Eigen::Index M = A.rows();
    const Eigen::Index K = A.cols();
    NnlsResult res;
    res.alpha = alpha0.cwiseMax(0.0);

    std::vector<char> free_set(static_cast<std::size_t>(K), 1);
    const Eigen::MatrixXd AAt = A * A.transpose();  // M x M, reused across rounds

    for (int outer = 0; outer < max_outer; ++outer) {
        Eigen::VectorXd r = e - A * res.alpha;
        res.residual_inf = r.lpNorm<Eigen::Infinity>();
        res.residual_history.push_back(res.residual_inf);
        res.iterations = outer;
        if (res.residual_inf <= tol_inf) {
            res.converged = true;
            return res;
        }

        // allow bound variables to re-enter when the gradient favors them
        Eigen::VectorXd grad = A.transpose() * r;
        for (Eigen::Index k = 0; k < K; ++k)
            if (!free_set[static_cast<std::size_t>(k)] && grad[k] > 0.0)
                free_set[static_cast<std::size_t>(k)] = 1;

        // normal matrix of the free set: downdate the cached AAt
        Eigen::MatrixXd G = AAt;
        for (Eigen::Index k = 0; k < K; ++k)
            if (!free_set[static_cast<std::size_t>(k)])
                G.noalias() -= A.col(k) * A.col(k).transpose();
        G.diagonal().array() += damping;

        const Eigen::VectorXd y = Eigen::LDLT<Eigen::MatrixXd>(G).solve(r);

        // delta = A_F^T y on the free set; clamp whatever turns negative
        bool clamped = false;
        for (Eigen::Index k = 0; k < K; ++k) {
            if (!free_set[static_cast<std::size_t>(k)]) continue;
            const double next = res.alpha[k] + A.col(k).dot(y);
            if (next < 0.0) {
                res.alpha[k] = 0.0;
                free_set[static_cast<std::size_t>(k)] = 0;
                clamped = true;
            } else {
                res.alpha[k] = next;
            }
        }
        if (!clamped) {
            // full step taken; the next round records the residual and exits
            continue;
        }
    }
    Eigen::VectorXd r = e - A * res.alpha;
    res.residual_inf = r.lpNorm<Eigen::Infinity>();
    res.residual_history.push_back(res.residual_inf);
    res.converged = res.residual_inf <= tol_inf;
    return res;
}

}  // namespace subframe::cubature
