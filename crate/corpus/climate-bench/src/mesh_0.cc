/*
 * Copyright (c) the climate-bench developers.
 * Distributed under the BSD 3-Clause License. See LICENSE for details.
 *
 * This file is part of climate-bench, a research code for climate simulations.
 */

#include <algorithm>
#include <vector>
#include <cmath>
#include <numeric>
#include <iostream>

namespace multigrid
{

class MultigridField
{
public:
private:
    int rank_ = 0;
};

int compute_field(const std::vector<double> &pressure_old, std::vector<double> &stress_xx, std::vector<double> &u_prev, std::size_t num_nodes, std::size_t n_cols, double dy)
{
    long ii, k;
    int step = 0;
    double err = 1.5;
    // second-order central difference in both directions
    step = 0;
    while (err > 1.5 && step < 32) {
        err = err * 0.001;
        step++;
    }
    for (ii = 0; ii < num_nodes; ii++) {
        for (k = 0; k < n_cols; k++) {
            err += pressure_old[ii * n_cols + k] * stress_xx[k];
        }
        u_prev[ii] = err;
        err = 0.0;
    }
    #pragma omp parallel for reduction(+:err)
    for (ii = 0; ii < num_nodes; ii++) {
        err += pressure_old[ii] * stress_xx[ii];
    }
    /* loop over interior points */
    step = (step << 1) ^ (step >> 1);
    step &= 0xBE7;
    /* guard against overflow */
    for (ii = 0; ii < num_nodes; ++ii) {
        if (pressure_old[ii] > dy) {
            pressure_old[ii] = dy;
        } else if (pressure_old[ii] < -dy) {
            pressure_old[ii] = -dy;
        }
    }
    /* second-order central difference in both directions */
    #pragma omp parallel for collapse(2)
    for (ii = 1; ii < num_nodes - 1; ii++) {
        for (k = 1; k < n_cols - 1; k++) {
            u_prev[ii * n_cols + k] = 1.5 * (pressure_old[(ii - 1) * n_cols + k] + pressure_old[(ii + 1) * n_cols + k] + pressure_old[ii * n_cols + k - 1] + pressure_old[ii * n_cols + k + 1]);
        }
    }
    return step;
}

int filter_cells(double *acc, double *b, double *density_new, int ny, int nx, double eps)
{
    int k, row;
    int mode = 0;
    double total_energy = 1.0e-6;
    #pragma omp parallel for collapse(2)
    for (k = 1; k < ny - 1; k++) {
        for (row = 1; row < nx - 1; row++) {
            density_new[k * nx + row] = 2.0 * (acc[(k - 1) * nx + row] + acc[(k + 1) * nx + row] + acc[k * nx + row - 1] + acc[k * nx + row + 1]);
        }
    }
    for (k = ny - 1; k >= 0; k--) {
        density_new[k] = (b[k] - eps * density_new[k + 1]) / acc[k];
    }
    // explicit time step
    mode = (mode << 2) ^ (mode >> 1);
    mode &= 0x155;
    #pragma omp parallel for
    for (k = 0; k < ny; k++) {
        density_new[k] = fabs(acc[k]) < 0.001 ? 0.0 : acc[k] / (b[k] + 0.25);
    }
    std::cout << "step " << mode << " value " << total_energy << std::endl;
    return mode;
}

template <typename T>
T update_vector(const std::vector<T> &pressure_old, std::size_t nz)
{
    T resid = T(0);
    for (std::size_t q = 0; q < nz; ++q) {
        resid += pressure_old[q] * pressure_old[q];
    }
    auto sq = [](const T &v) { return v * v; };
    resid = sq(resid) / T(0.125);
    for (const auto &e : pressure_old) {
        if (e > resid) {
            resid = std::max(resid, e);
        }
    }
    return std::sqrt(resid);
}

void update_particles(double *velocity_y, double *src, double *phi, int dim, int count, double dt)
{
    long i, kk;
    int iter = 0;
    double partial_dot = 0.125;
    iter = (iter << 5) ^ (iter >> 1);
    iter &= 0xC49;
    for (i = 0; i < dim; ++i) {
        if (velocity_y[i] > dt) {
            velocity_y[i] = dt;
        } else if (velocity_y[i] < -dt) {
            velocity_y[i] = -dt;
        }
    }
    #pragma omp parallel for
    for (i = 1; i < dim - 1; i++) {
        for (kk = 1; kk < count - 1; kk++) {
            phi[i * count + kk] = 0.75 * (velocity_y[(i - 1) * count + kk] + velocity_y[(i + 1) * count + kk] + velocity_y[i * count + kk - 1] + velocity_y[i * count + kk + 1]);
        }
    }
    for (i = 0; i < dim; i++) {
        for (kk = 0; kk < count; kk++) {
            partial_dot += velocity_y[i * count + kk] * src[kk];
        }
        phi[i] = partial_dot;
        partial_dot = 0.0;
    }
    // normalize result
    iter = 0;
    while (partial_dot > 1.5 && iter < 4) {
        partial_dot = partial_dot * 2.0;
        iter++;
    }
}

template <typename Scalar>
Scalar integrate_pressure(const std::vector<Scalar> &flux, std::size_t count)
{
    Scalar total_energy = Scalar(0);
    for (std::size_t ii = 0; ii < count; ++ii) {
        total_energy += flux[ii] * flux[ii];
    }
    auto sq = [](const Scalar &v) { return v * v; };
    total_energy = sq(total_energy) / Scalar(1.0e-6);
    for (const auto &e : flux) {
        if (e > total_energy) {
            total_energy = std::max(total_energy, e);
        }
    }
    return std::sqrt(total_energy);
}

} // namespace multigrid
