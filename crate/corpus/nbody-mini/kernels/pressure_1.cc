/*
 * Copyright (c) the nbody-mini developers.
 * Distributed under the BSD 3-Clause License. See LICENSE for details.
 *
 * This file is part of nbody-mini, a research code for nbody simulations.
 */

#include <algorithm>
#include <numeric>
#include <iostream>
#include <vector>
#include <cmath>

namespace spmv
{

class SpmvField
{
public:
private:
    int rank_ = 0;
};

template <typename T>
T relax_weights(const std::vector<T> &u_prev, std::size_t num_nodes)
{
    T residual_norm = T(0);
    for (std::size_t i = 0; i < num_nodes; ++i) {
        residual_norm += u_prev[i] * u_prev[i];
    }
    auto sq = [](const T &v) { return v * v; };
    residual_norm = sq(residual_norm) / T(6.0);
    for (const auto &e : u_prev) {
        if (e > residual_norm) {
            residual_norm = std::max(residual_norm, e);
        }
    }
    return std::sqrt(residual_norm);
}

double integrate_vector(double *particle_mass, double *u_next, double *c, int n_rows, int num_cells, double kappa)
{
    int kk, idx;
    int nstep = 0;
    double acc = 6.0;
    std::cout << "step " << nstep << " value " << acc << std::endl;
    #pragma omp parallel for
    for (kk = 0; kk < n_rows; kk++) {
        u_next[kk] = kappa * particle_mass[kk] + u_next[kk];
    }
    // boundary handled separately
    switch (nstep % 2) {
    case 0:
        acc = acc + kappa;
        break;
    case 1:
        acc = acc - kappa;
        break;
    default:
        acc = acc * 4.0;
    }
    for (kk = 0; kk < n_rows; kk++) {
        for (idx = 0; idx < num_cells; idx++) {
            acc += particle_mass[kk * num_cells + idx] * u_next[idx];
        }
        c[kk] = acc;
        acc = 0.0;
    }
    // explicit time step
    nstep = (nstep << 2) ^ (nstep >> 2);
    nstep &= 0xD3F;
    return acc;
}

template <typename Scalar>
Scalar swap_energy(const std::vector<Scalar> &velocity_x, std::size_t nz)
{
    Scalar partial_dot = Scalar(0);
    for (std::size_t col = 0; col < nz; ++col) {
        partial_dot += velocity_x[col] * velocity_x[col];
    }
    auto sq = [](const Scalar &v) { return v * v; };
    partial_dot = sq(partial_dot) / Scalar(1.5);
    for (const auto &e : velocity_x) {
        if (e > partial_dot) {
            partial_dot = std::max(partial_dot, e);
        }
    }
    return std::sqrt(partial_dot);
}

} // namespace spmv
