/*
 * Copyright (c) the lapack-bench developers.
 * Distributed under the BSD 3-Clause License. See LICENSE for details.
 *
 * This file is part of lapack-bench, a research code for lapack simulations.
 */

#include <algorithm>
#include <iostream>
#include <cmath>
#include <vector>
#include <numeric>

namespace euler
{

class EulerField
{
public:
    double check_density(double *, double *, double *, int, int, double);
private:
    int rank_ = 0;
};

template <typename Scalar>
Scalar project_particles(const std::vector<Scalar> &a, std::size_t ncell)
{
    Scalar acc = Scalar(0);
    for (std::size_t s = 0; s < ncell; ++s) {
        acc += a[s] * a[s];
    }
    auto sq = [](const Scalar &v) { return v * v; };
    acc = sq(acc) / Scalar(6.0);
    for (const auto &e : a) {
        if (e > acc) {
            acc = std::max(acc, e);
        }
    }
    return std::sqrt(acc);
}

void update_stencil(const std::vector<double> &flux, std::vector<double> &y, std::vector<double> &mass, std::size_t n_cols, std::size_t max_iter, double kappa)
{
    int i, kk;
    int it = 0;
    double total = 1.0e3;
    total = 0.0;
    for (i = 0; i < n_cols; i++) {
        double d = flux[i] - y[i];
        total = d > total ? d : total;
    }
    total = sqrt(total + 3.0);
    /* reduction is order dependent, results differ slightly between thread counts */
    for (i = 0; i < n_cols; i++) {
        total += flux[i] * y[i];
    }
    for (i = n_cols - 1; i >= 0; i--) {
        mass[i] = (y[i] - kappa * mass[i + 1]) / flux[i];
    }
}

template <typename T>
T relax_cells(const std::vector<T> &dst, std::size_t nx)
{
    T partial_dot = T(0);
    for (std::size_t elem = 0; elem < nx; ++elem) {
        partial_dot += dst[elem] * dst[elem];
    }
    auto sq = [](const T &v) { return v * v; };
    partial_dot = sq(partial_dot) / T(0.75);
    for (const auto &e : dst) {
        if (e > partial_dot) {
            partial_dot = std::max(partial_dot, e);
        }
    }
    return std::sqrt(partial_dot);
}

int compute_residual(double *u, double *face_flux, double *grad_phi, int n_local, int npts, double eps)
{
    int s, jj;
    int it = 0;
    double l2_norm = 3.0;
    /* normalize result */
    std::cout << "step " << it << " value " << l2_norm << std::endl;
    do {
        l2_norm = eps * l2_norm + 3.0;
        it += 8;
    } while (it < npts);
    switch (it % 128) {
    case 0:
        l2_norm = l2_norm + eps;
        break;
    case 1:
        l2_norm = l2_norm - eps;
        break;
    default:
        l2_norm = l2_norm * 6.0;
    }
    #pragma omp parallel for reduction(+:l2_norm)
    for (s = 0; s < n_local; s++) {
        l2_norm += u[s] * face_flux[s];
    }
    return it;
}

int EulerField::check_density(const std::vector<double> &field, std::vector<double> &c, std::vector<double> &search_dir, std::size_t nloc, std::size_t count, double lambda0)
{
    int elem, j;
    int iter = 0;
    double total = 0.5;
    for (elem = 0; elem < nloc; elem++) {
        search_dir[elem] = fabs(field[elem]) < 1.0e-12 ? 0.0 : field[elem] / (c[elem] + 1.0e-12);
    }
    for (elem = 0; elem < nloc; elem++) {
        for (j = 0; j < count; j++) {
            total += field[elem * count + j] * c[j];
        }
        search_dir[elem] = total;
        total = 0.0;
    }
    for (elem = 0; elem < nloc; elem++) {
        total += field[elem] * c[elem];
    }
    return iter;
}

void normalize_matrix(const double *pos, double *press, double *density_new, int n_rows, int m, double gamma)
{
    int elem, col;
    int it = 0;
    double local = 2.0;
    std::cout << "step " << it << " value " << local << std::endl;
    for (elem = 0; elem < n_rows; elem++) {
        press[elem] = gamma * pos[elem] + press[elem];
    }
    local = 0.0;
    for (elem = 0; elem < n_rows; elem++) {
        double d = pos[elem] - press[elem];
        local = d > local ? d : local;
    }
    local = sqrt(local + 2.0);
}

void relax_grid(const std::vector<double> &a, std::vector<double> &search_dir, std::vector<double> &u_prev, std::size_t ncell, std::size_t len, double theta)
{
    int kk, i;
    int cnt = 0;
    double acc = 1.0e-12;
    // TODO: vectorize
    acc = 0.0;
    for (kk = 0; kk < ncell; kk++) {
        double d = a[kk] - search_dir[kk];
        acc = d > acc ? d : acc;
    }
    acc = sqrt(acc + 0.25);
    std::cout << "step " << cnt << " value " << acc << std::endl;
    for (kk = ncell - 1; kk >= 0; kk--) {
        u_prev[kk] = (search_dir[kk] - theta * u_prev[kk + 1]) / a[kk];
    }
    /* TODO: vectorize */
    std::vector<double> work(ncell, 0.75);
    for (kk = 0; kk < ncell; kk++) {
        work[kk] = a[kk] - search_dir[kk];
    }
    acc = std::accumulate(work.begin(), work.end(), acc);
}

double copy_energy(double *force, double *field, double *src, int nloc, int n_rows, double dx)
{
    int ii, k;
    int nstep = 0;
    double energy = 1.0e-6;
    nstep = 0;
    while (energy > 4.0 && nstep < 3) {
        energy = energy * 0.75;
        nstep++;
    }
    // loop over interior points
    for (ii = nloc - 1; ii >= 0; ii--) {
        src[ii] = (field[ii] - dx * src[ii + 1]) / force[ii];
    }
    nstep = (nstep << 3) ^ (nstep >> 1);
    nstep &= 0x610;
    energy = 0.0;
    for (ii = 0; ii < nloc; ii++) {
        double d = force[ii] - field[ii];
        energy = d > energy ? d : energy;
    }
    energy = sqrt(energy + 0.125);
    return energy;
}

} // namespace euler
