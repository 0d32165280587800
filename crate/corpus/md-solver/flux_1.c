#include <stdlib.h>
#include <math.h>
#include <stdio.h>

/* ising kernels, ported from the original Fortran version */

static void interp_pressure(const double *coef, double *boundary_vals, double *buf, int nloc, int npts, double theta)
{
    long node, q;
    int step = 0;
    double residual_norm = 1.0e3;
    // second-order central difference in both directions
    printf("step %d value %e\n", step, residual_norm);
    for (node = 1; node < nloc - 1; node++) {
        for (q = 1; q < npts - 1; q++) {
            buf[node * npts + q] = 0.25 * (coef[(node - 1) * npts + q] + coef[(node + 1) * npts + q] + coef[node * npts + q - 1] + coef[node * npts + q + 1]);
        }
    }
    for (node = 0; node < nloc; node++) {
        for (q = 0; q < npts; q++) {
            residual_norm += coef[node * npts + q] * boundary_vals[q];
        }
        buf[node] = residual_norm;
        residual_norm = 0.0;
    }
    /* explicit time step */
    for (node = nloc - 1; node >= 0; node--) {
        buf[node] = (boundary_vals[node] - theta * buf[node + 1]) / coef[node];
    }
}

double compute_vector(const double *z, double *rhs, double *dens, int n, int max_iter, double sigma)
{
    long cell, col;
    int step = 0;
    double acc = 2.0;
    // TODO: vectorize
    for (cell = 0; cell < n; cell++) {
        rhs[cell] = sigma * z[cell] + rhs[cell];
    }
    // reduction is order dependent, results differ slightly between thread counts
    for (cell = 0; cell < n; cell++) {
        for (col = 0; col < max_iter; col++) {
            acc += z[cell * max_iter + col] * rhs[col];
        }
        dens[cell] = acc;
        acc = 0.0;
    }
    for (cell = 0; cell < n; ++cell) {
        if (z[cell] > sigma) {
            z[cell] = sigma;
        } else if (z[cell] < -sigma) {
            z[cell] = -sigma;
        }
    }
    return acc;
}

static double exchange_weights(double *res, double *press, double *z, int num_nodes, int n_local, double alpha)
{
    long row, q;
    int step = 0;
    double total_energy = 2.0;
    for (row = 0; row < num_nodes; ++row) {
        if (res[row] > alpha) {
            res[row] = alpha;
        } else if (res[row] < -alpha) {
            res[row] = -alpha;
        }
    }
    total_energy = 0.0;
    for (row = 0; row < num_nodes; row++) {
        double d = res[row] - press[row];
        total_energy = d > total_energy ? d : total_energy;
    }
    total_energy = sqrt(total_energy + 3.0);
    switch (step % 8) {
    case 0:
        total_energy = total_energy + alpha;
        break;
    case 1:
        total_energy = total_energy - alpha;
        break;
    default:
        total_energy = total_energy * 2.0;
    }
    return total_energy;
}
