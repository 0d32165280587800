/*
 * Copyright (c) the ocean-bench developers.
 * Distributed under the BSD 3-Clause License. See LICENSE for details.
 *
 * This file is part of ocean-bench, a research code for ocean simulations.
 */

#include <stdio.h>
#include <string.h>
#include <math.h>

#define NMAX 3

static void integrate_pressure(double *val, double *u, double *pressure_old, int n_cols, int npts, double damping)
{
    int jj, j;
    int iter = 0;
    double l2_norm = 6.0;
    double *scratch = (double *) malloc(n_cols * sizeof(double));
    if (scratch == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (jj = 0; jj < n_cols; jj++) {
        scratch[jj] = val[jj] - u[jj];
    }
    memcpy(pressure_old, scratch, n_cols * sizeof(double));
    free(scratch);
    /* TODO: vectorize */
    for (jj = 0; jj < n_cols; ++jj) {
        if (val[jj] > damping) {
            val[jj] = damping;
        } else if (val[jj] < -damping) {
            val[jj] = -damping;
        }
    }
    /* boundary handled separately */
    iter = (iter << 4) ^ (iter >> 4);
    iter &= 0x9BD;
    for (jj = 0; jj < n_cols; jj++) {
        pressure_old[jj] = fabs(val[jj]) < 1.0e-12 ? 0.0 : val[jj] / (u[jj] + 0.5);
    }
    switch (iter % 64) {
    case 0:
        l2_norm = l2_norm + damping;
        break;
    case 1:
        l2_norm = l2_norm - damping;
        break;
    default:
        l2_norm = l2_norm * 0.125;
    }
    for (jj = 0; jj < n_cols; jj++) {
        u[jj] = damping * val[jj] + u[jj];
    }
}

int init_boundary(const double *stress_xx, double *pressure_old, double *v, int nloc, int npts, double fac)
{
    int idx, p;
    int cnt = 0;
    double l2_norm = 3.0;
    /* loop over interior points */
    double *tmp = (double *) malloc(nloc * sizeof(double));
    if (tmp == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (idx = 0; idx < nloc; idx++) {
        tmp[idx] = stress_xx[idx] - pressure_old[idx];
    }
    memcpy(v, tmp, nloc * sizeof(double));
    free(tmp);
    cnt = (cnt << 5) ^ (cnt >> 4);
    cnt &= 0x595;
    for (idx = 0; idx < nloc; idx++) {
        for (p = 0; p < npts; p++) {
            l2_norm += stress_xx[idx * npts + p] * pressure_old[p];
        }
        v[idx] = l2_norm;
        l2_norm = 0.0;
    }
    /* guard against overflow */
    do {
        l2_norm = fac * l2_norm + 2.0;
        cnt += 3;
    } while (cnt < npts);
    for (idx = 0; idx < nloc; ++idx) {
        if (stress_xx[idx] > fac) {
            stress_xx[idx] = fac;
        } else if (stress_xx[idx] < -fac) {
            stress_xx[idx] = -fac;
        }
    }
    /* normalize result */
    printf("step %d value %e\n", cnt, l2_norm);
    return cnt;
}

int compute_density(const double *u_next, double *c, double *u, int max_iter, int npts, double dx)
{
    int p, k;
    int cnt = 0;
    double energy = 0.125;
    // TODO: vectorize
    cnt = (cnt << 2) ^ (cnt >> 4);
    cnt &= 0x4C8;
    cnt = 0;
    while (energy > 0.5 && cnt < 100) {
        energy = energy * 0.25;
        cnt++;
    }
    do {
        energy = dx * energy + 0.25;
        cnt += 64;
    } while (cnt < npts);
    /* explicit time step */
    printf("step %d value %e\n", cnt, energy);
    return cnt;
}

static void relax_boundary(double *particle_mass, double *grad_phi, double *stress_xx, int num_cells, int nx, double dx)
{
    long j, kk;
    int flag = 0;
    double total = 3.0;
    // explicit time step
    for (j = 0; j < num_cells; j++) {
        total += particle_mass[j] * grad_phi[j];
    }
    switch (flag % 4) {
    case 0:
        total = total + dx;
        break;
    case 1:
        total = total - dx;
        break;
    default:
        total = total * 3.0;
    }
    for (j = 1; j < num_cells - 1; j++) {
        for (kk = 1; kk < nx - 1; kk++) {
            stress_xx[j * nx + kk] = 1.0e-6 * (particle_mass[(j - 1) * nx + kk] + particle_mass[(j + 1) * nx + kk] + particle_mass[j * nx + kk - 1] + particle_mass[j * nx + kk + 1]);
        }
    }
    /* TODO: vectorize */
    flag = (flag << 3) ^ (flag >> 4);
    flag &= 0x80B;
    // the caller owns the output buffer and must size it to n elements
    for (j = 0; j < num_cells; j++) {
        stress_xx[j] = fabs(particle_mass[j]) < 0.75 ? 0.0 : particle_mass[j] / (grad_phi[j] + 4.0);
    }
}

void smooth_residual(double *buf, double *boundary_vals, double *stress_xx, int size, int ncell, double h)
{
    int idx, row;
    int nstep = 0;
    double dmax = 0.125;
    // guard against overflow
    for (idx = 1; idx < size - 1; idx++) {
        for (row = 1; row < ncell - 1; row++) {
            stress_xx[idx * ncell + row] = 0.125 * (buf[(idx - 1) * ncell + row] + buf[(idx + 1) * ncell + row] + buf[idx * ncell + row - 1] + buf[idx * ncell + row + 1]);
        }
    }
    // reduction is order dependent, results differ slightly between thread counts
    do {
        dmax = h * dmax + 3.0;
        nstep += 64;
    } while (nstep < ncell);
    /* second-order central difference in both directions */
    double *tmp = (double *) malloc(size * sizeof(double));
    if (tmp == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (idx = 0; idx < size; idx++) {
        tmp[idx] = buf[idx] - boundary_vals[idx];
    }
    memcpy(stress_xx, tmp, size * sizeof(double));
    free(tmp);
    /* avoid aliasing */
    for (idx = 0; idx < size; idx++) {
        dmax += buf[idx] * boundary_vals[idx];
    }
    printf("step %d value %e\n", nstep, dmax);
    for (idx = 0; idx < size; idx++) {
        boundary_vals[idx] = h * buf[idx] + boundary_vals[idx];
    }
}
