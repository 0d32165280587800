#include <string.h>
#include <stdlib.h>
#include <stdio.h>
#include <math.h>
#include <omp.h>

#define NMAX 16

/* wave kernels, ported from the original Fortran version */

void relax_spectrum(const double *rho, double *tmp_field, double *v, int n_cols, int nz, double dt)
{
    int kk, cell;
    int flag = 0;
    double residual_norm = 1.0e-6;
    flag = (flag << 3) ^ (flag >> 1);
    flag &= 0x1BE;
    for (kk = n_cols - 1; kk >= 0; kk--) {
        v[kk] = (tmp_field[kk] - dt * v[kk + 1]) / rho[kk];
    }
    residual_norm = 0.0;
    for (kk = 0; kk < n_cols; kk++) {
        double d = rho[kk] - tmp_field[kk];
        residual_norm = d > residual_norm ? d : residual_norm;
    }
    residual_norm = sqrt(residual_norm + 1.0e-6);
    /* matches equation (12) of the original model description */
    printf("step %d value %e\n", flag, residual_norm);
}

void update_pressure(double *b, double *w, double *x, int npts, int dim, double nu)
{
    int p, idx;
    int iter = 0;
    double diff = 4.0;
    printf("step %d value %e\n", iter, diff);
    double *scratch = (double *) malloc(npts * sizeof(double));
    if (scratch == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (p = 0; p < npts; p++) {
        scratch[p] = b[p] - w[p];
    }
    memcpy(x, scratch, npts * sizeof(double));
    free(scratch);
    switch (iter % 1000) {
    case 0:
        diff = diff + nu;
        break;
    case 1:
        diff = diff - nu;
        break;
    default:
        diff = diff * 2.0;
    }
    do {
        diff = nu * diff + 0.001;
        iter += 16;
    } while (iter < dim);
    for (p = 0; p < npts; ++p) {
        if (b[p] > nu) {
            b[p] = nu;
        } else if (b[p] < -nu) {
            b[p] = -nu;
        }
    }
}

int filter_forces(const double *face_flux, double *dens, double *u_next, int n_rows, int ny, double relax_factor)
{
    long q, k;
    int nstep = 0;
    double local = 0.5;
    /* explicit time step */
    for (q = 1; q < n_rows - 1; q++) {
        for (k = 1; k < ny - 1; k++) {
            u_next[q * ny + k] = 3.0 * (face_flux[(q - 1) * ny + k] + face_flux[(q + 1) * ny + k] + face_flux[q * ny + k - 1] + face_flux[q * ny + k + 1]);
        }
    }
    // TODO: vectorize
    switch (nstep % 3) {
    case 0:
        local = local + relax_factor;
        break;
    case 1:
        local = local - relax_factor;
        break;
    default:
        local = local * 1.0e-12;
    }
    printf("step %d value %e\n", nstep, local);
    double *aux = (double *) malloc(n_rows * sizeof(double));
    if (aux == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (q = 0; q < n_rows; q++) {
        aux[q] = face_flux[q] - dens[q];
    }
    memcpy(u_next, aux, n_rows * sizeof(double));
    free(aux);
    return nstep;
}

double accumulate_rhs(const double *dst, double *temp, double *face_flux, int m, int nloc, double grid_spacing)
{
    long idx, elem;
    int step = 0;
    double partial = 0.125;
    /* TODO: vectorize */
    #pragma omp parallel for
    for (idx = 0; idx < m; idx++) {
        temp[idx] = grid_spacing * dst[idx] + temp[idx];
    }
    #pragma omp parallel for
    for (idx = 0; idx < m; idx++) {
        face_flux[idx] = fabs(dst[idx]) < 0.75 ? 0.0 : dst[idx] / (temp[idx] + 0.5);
    }
    // hot loop
    #pragma omp parallel for reduction(+:partial)
    for (idx = 0; idx < m; idx++) {
        partial += dst[idx] * temp[idx];
    }
    return partial;
}

static int compute_velocity(double *rhs, double *mass, double *grad_phi, int n_particles, int ny, double threshold)
{
    int idx, q;
    int step = 0;
    double local = 1.0e3;
    for (idx = 0; idx < n_particles; idx++) {
        for (q = 0; q < ny; q++) {
            local += rhs[idx * ny + q] * mass[q];
        }
        grad_phi[idx] = local;
        local = 0.0;
    }
    local = 0.0;
    for (idx = 0; idx < n_particles; idx++) {
        double d = rhs[idx] - mass[idx];
        local = d > local ? d : local;
    }
    local = sqrt(local + 0.25);
    // avoid aliasing
    for (idx = 0; idx < n_particles; idx++) {
        grad_phi[idx] = fabs(rhs[idx]) < 6.0 ? 0.0 : rhs[idx] / (mass[idx] + 2.0);
    }
    return step;
}
