#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cfcp/matrix.hpp"
#include "cfcp/rng.hpp"

namespace cfcp {

struct Dataset;

/// Std of Gaussian noise added to the stored exogenous U when estimating
/// counterfactuals. 0 reproduces oracle counterfactuals exactly.
struct CfNoiseSpec {
    double sigma_u = 0.0;
};

/// Synthetic regression SCM:
///   U1,U2 ~ N(0,1), A ~ Bernoulli(0.4)
///   X = sin(U1) + cos(A*U2) + A + 0.1
///   Y = 0.2 X^2 + 1.2 X + 0.2 + eps,  eps ~ N(0, noise_std^2)
struct RegressionScm {
    double noise_std = 0.6;
    double p_a1 = 0.4;

    static double structural_x(double u1, double u2, int a) {
        const double ad = static_cast<double>(a);
        return std::sin(u1) + std::cos(ad * u2) + ad + 0.1;
    }
    static double structural_y_mean(double x) { return 0.2 * x * x + 1.2 * x + 0.2; }
};

/// Synthetic classification SCM (d features, K classes):
///   U ~ N(0, I_d), A ~ Bernoulli(0.5)
///   X = (A - 0.5) w_A + U D_U
///   Y ~ Categorical(softmax(X^{.3} W_X + U W_U + E)),  E ~ N(0, sigma_logit^2 I_K)
/// Matrices are sampled once per experiment seed and frozen: D_U, W_X, W_U are
/// identity plus entrywise Uniform[0, 0.2]; w_A has its first r entries
/// Uniform[2, 2.2], the rest zero. D_U must be full rank.
struct ClassificationScm {
    int d = 10;
    int K = 10;
    int r = 3;
    double sigma_logit = 0.2;
    std::vector<double> w_A; // d
    Matrix D_U;              // d x d
    Matrix W_X;              // d x K
    Matrix W_U;              // d x K

    /// X-equation for one row; writes d entries into x_out.
    void structural_x(std::span<const double> u, int a, std::span<double> x_out) const;
};

/// Samples the frozen matrices; retries up to 10 times if D_U is rank
/// deficient, then throws.
ClassificationScm make_classification_scm(Rng rng, int d = 10, int K = 10, int r = 3,
                                          double sigma_logit = 0.2);

Dataset gen_regression(std::size_t n, const RegressionScm& scm, Rng& rng);
Dataset gen_classification(std::size_t n, const ClassificationScm& scm, Rng& rng);

/// Re-evaluates the X structural equation at (U + eps, target_a) with
/// eps ~ N(0, sigma_u^2 I) drawn from `rng`. With sigma_u = 0 no randomness
/// is consumed and the result is bitwise equal to generation. `u_used`
/// receives the noised exogenous actually used.
std::vector<double> counterfactual_features(const RegressionScm& scm, std::span<const double> u,
                                            int target_a, const CfNoiseSpec& noise, Rng& rng,
                                            std::vector<double>* u_used = nullptr);
std::vector<double> counterfactual_features(const ClassificationScm& scm, std::span<const double> u,
                                            int target_a, const CfNoiseSpec& noise, Rng& rng,
                                            std::vector<double>* u_used = nullptr);

} // namespace cfcp
