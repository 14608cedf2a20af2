// Copyright 2026 The toricnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORICNET_CRN_STEADY_STATE_HPP
#define TORICNET_CRN_STEADY_STATE_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include <toricnet/core/errors.hpp>
#include <toricnet/crn/analysis.hpp>

namespace toricnet::crn {

struct SteadyState {
    std::vector<double> concentrations;
    /// ||A_kappa Psi(c)||_inf after substitution.
    double residual = 0.0;
    /// Log-least-squares residual of the pairwise balancing equations.
    double log_residual = 0.0;
    /// "min-norm-log" or "compatibility-class".
    std::string normalization;
};

inline constexpr double birch_tolerance = 1e-9;

/// Monomial vector Psi(c)_l = prod_j c_j^{Y_jl}.
inline std::vector<double> monomials(const Network& net, const std::vector<double>& c) {
    std::vector<double> psi(net.complex_count(), 1.0);
    for (std::size_t l = 0; l < net.complex_count(); ++l)
        for (std::size_t j = 0; j < net.species_count(); ++j)
            if (unsigned e = net.complexes()[l][j]) psi[l] *= std::pow(c[j], static_cast<double>(e));
    return psi;
}

inline Eigen::MatrixXd to_eigen(const RatMatrix& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).to_double();
    return e;
}

/// Basis (as columns) of the conservation laws: w with w^T S = 0.
inline Eigen::MatrixXd conservation_laws(const Network& net) {
    auto basis = nullspace(to_rational(stoichiometric_matrix(net).transpose()));
    Eigen::MatrixXd w(net.species_count(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t i = 0; i < net.species_count(); ++i) w(i, k) = basis[k][i].to_double();
    return w;
}

/// ||A_kappa Psi(c)||_inf, and the threshold it is compared against.
inline std::pair<double, double> balancing_residual(const Network& net, const RatMatrix& rates,
                                                    const std::vector<double>& c, double tolerance = birch_tolerance) {
    auto psi = monomials(net, c);
    Eigen::MatrixXd a = to_eigen(rates);
    Eigen::Map<const Eigen::VectorXd> v(psi.data(), static_cast<Eigen::Index>(psi.size()));
    double residual = (a * v).cwiseAbs().maxCoeff();
    double kappa = 0.0;
    for (std::size_t i = 0; i < rates.rows(); ++i)
        for (std::size_t j = 0; j < rates.cols(); ++j)
            if (i != j) kappa = std::max(kappa, std::abs(rates(i, j).to_double()));
    double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
    return {residual, tolerance * kappa * scale};
}

namespace detail {

// Newton on x = x* + W mu for W^T exp(x) = W^T c0; the map is the gradient of a
// strictly convex function, so damping by backtracking on the residual suffices.
inline Eigen::VectorXd project_to_class(const Eigen::VectorXd& x_star, const Eigen::MatrixXd& w,
                                        const Eigen::VectorXd& c0) {
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(w.cols());
    Eigen::VectorXd target = w.transpose() * c0;
    auto residual = [&](const Eigen::VectorXd& m) {
        Eigen::VectorXd c = (x_star + w * m).array().exp().matrix();
        return Eigen::VectorXd(w.transpose() * c - target);
    };
    Eigen::VectorXd r = residual(mu);
    for (int iter = 0; iter < 200 && r.lpNorm<Eigen::Infinity>() > 1e-14 * std::max(1.0, target.lpNorm<Eigen::Infinity>());
         ++iter) {
        Eigen::VectorXd c = (x_star + w * mu).array().exp().matrix();
        Eigen::MatrixXd jac = w.transpose() * c.asDiagonal() * w;
        Eigen::VectorXd step = jac.ldlt().solve(-r);
        double t = 1.0;
        Eigen::VectorXd next = mu + step;
        Eigen::VectorXd rn = residual(next);
        while (rn.norm() >= r.norm() && t > 1e-12) {
            t *= 0.5;
            next = mu + t * step;
            rn = residual(next);
        }
        if (rn.norm() >= r.norm()) break;
        mu = next;
        r = rn;
    }
    return x_star + w * mu;
}

}  // namespace detail

/// Complex-balanced steady state. Solves <Y_k - Y_l, log c> = log K_k - log K_l
/// within each linkage class by minimum-norm least squares; with `c0` the
/// result is moved to the stoichiometric compatibility class of c0.
inline SteadyState birch_point(const Network& net, const Bindings& bindings = {},
                               const std::optional<std::vector<double>>& c0 = std::nullopt,
                               double tolerance = birch_tolerance) {
    if (!(tolerance > 0)) throw InputError("tolerance must be positive");
    auto a = analyze(net);
    if (!a.weakly_reversible)
        throw DomainRefusal("NotWeaklyReversible", "a linkage class is not strongly connected");
    auto k = tree_constants(net, bindings);
    std::vector<double> log_k(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) log_k[i] = std::log(k[i].to_double());

    std::size_t s = net.species_count();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& members : a.linkage_classes)
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) pairs.emplace_back(members[i], members[j]);
    Eigen::MatrixXd m(pairs.size(), s);
    Eigen::VectorXd rhs(pairs.size());
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        auto [p, q] = pairs[r];
        for (std::size_t j = 0; j < s; ++j)
            m(r, j) = double(net.complexes()[p][j]) - double(net.complexes()[q][j]);
        rhs(r) = log_k[p] - log_k[q];
    }
    Eigen::VectorXd x = m.completeOrthogonalDecomposition().solve(rhs);
    double log_residual = pairs.empty() ? 0.0 : (m * x - rhs).lpNorm<Eigen::Infinity>();
    double rhs_scale = pairs.empty() ? 1.0 : std::max(1.0, rhs.lpNorm<Eigen::Infinity>());
    if (log_residual > tolerance * rhs_scale)
        throw DomainRefusal("NotComplexBalanced", "rates are off the toric moduli; log residual " +
                                                      std::to_string(log_residual));

    SteadyState out;
    out.normalization = "min-norm-log";
    if (c0) {
        if (c0->size() != s) throw InputError("c0 length does not match species count");
        Eigen::MatrixXd w = conservation_laws(net);
        if (w.cols() > 0) {
            Eigen::Map<const Eigen::VectorXd> init(c0->data(), static_cast<Eigen::Index>(s));
            x = detail::project_to_class(x, w, init);
        }
        out.normalization = "compatibility-class";
    }
    out.concentrations.resize(s);
    for (std::size_t j = 0; j < s; ++j) out.concentrations[j] = std::exp(x(j));
    out.log_residual = log_residual;
    auto [residual, threshold] = balancing_residual(net, build_rate_matrix(net, bindings), out.concentrations, tolerance);
    out.residual = residual;
    if (residual > threshold)
        throw DomainRefusal("NotComplexBalanced", "substituted residual " + std::to_string(residual) +
                                                      " exceeds " + std::to_string(threshold));
    return out;
}

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    /// Largest relative drift |w.c(t) - w.c0| / |w.c0| over the conservation laws.
    double max_conservation_drift = 0.0;
};

/// Mass-action ODE dc/dt = Y A_kappa Psi(c), integrated with classical RK4.
/// Every `record_every`-th step is stored (the final state always is).
inline Trajectory simulate(const Network& net, const Bindings& bindings, const std::vector<double>& c0,
                           double t_end, double dt, std::size_t record_every = 1) {
    std::size_t s = net.species_count();
    if (c0.size() != s) throw InputError("c0 length does not match species count");
    if (!(dt > 0) || !(t_end >= 0)) throw InputError("dt must be positive and t_end non-negative");
    double total = 0.0;
    for (double v : c0) {
        if (!(v >= 0) || !std::isfinite(v)) throw InputError("initial concentrations must be non-negative");
        total += v;
    }
    if (!(total > 0)) throw InputError("initial concentrations must not all vanish");
    if (record_every == 0) record_every = 1;

    Eigen::MatrixXd ya = to_eigen(to_rational(complex_matrix(net))) * to_eigen(build_rate_matrix(net, bindings));
    auto rhs = [&](const Eigen::VectorXd& c) {
        std::vector<double> cv(c.data(), c.data() + c.size());
        auto psi = monomials(net, cv);
        return Eigen::VectorXd(ya * Eigen::Map<const Eigen::VectorXd>(psi.data(), static_cast<Eigen::Index>(psi.size())));
    };
    Eigen::MatrixXd w = conservation_laws(net);
    Eigen::Map<const Eigen::VectorXd> init(c0.data(), static_cast<Eigen::Index>(s));
    Eigen::VectorXd invariant0 = w.transpose() * init;

    Trajectory traj;
    Eigen::VectorXd c = init;
    auto record = [&](double t) {
        traj.times.push_back(t);
        traj.states.emplace_back(c.data(), c.data() + c.size());
    };
    record(0.0);
    auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    double t = 0.0;
    for (std::size_t n = 1; n <= steps; ++n) {
        double h = std::min(dt, t_end - t);
        Eigen::VectorXd k1 = rhs(c);
        Eigen::VectorXd k2 = rhs(c + 0.5 * h * k1);
        Eigen::VectorXd k3 = rhs(c + 0.5 * h * k2);
        Eigen::VectorXd k4 = rhs(c + h * k3);
        c += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = (n == steps) ? t_end : t + h;
        if (c.minCoeff() < -1e-12)
            throw InputError("step at t=" + std::to_string(t) + " produced a negative concentration; use a smaller dt");
        Eigen::VectorXd inv = w.transpose() * c;
        for (Eigen::Index q = 0; q < inv.size(); ++q) {
            double base = std::abs(invariant0(q));
            double drift = std::abs(inv(q) - invariant0(q));
            traj.max_conservation_drift = std::max(traj.max_conservation_drift, base > 0 ? drift / base : drift);
        }
        if (n % record_every == 0 || n == steps) record(t);
    }
    return traj;
}

}  // namespace toricnet::crn

#endif  // TORICNET_CRN_STEADY_STATE_HPP
