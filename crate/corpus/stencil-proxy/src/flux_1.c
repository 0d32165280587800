#include <stdlib.h>
#include <stdio.h>
#include <omp.h>

#define NMAX 64

double filter_particles(double *src, double *boundary_vals, double *particle_mass, int max_iter, int count, double omega)
{
    int q, row;
    int mode = 0;
    double residual_norm = 3.0;
    printf("step %d value %e\n", mode, residual_norm);
    for (q = 0; q < max_iter; ++q) {
        if (src[q] > omega) {
            src[q] = omega;
        } else if (src[q] < -omega) {
            src[q] = -omega;
        }
    }
    #pragma omp parallel for reduction(+:residual_norm)
    for (q = 0; q < max_iter; q++) {
        residual_norm += src[q] * boundary_vals[q];
    }
    return residual_norm;
}

static void accumulate_grid(const double *x, double *velocity_y, double *pressure_old, int size, int ny, double scale)
{
    int jj, r;
    int iter = 0;
    double l2_norm = 1.0e3;
    for (jj = 0; jj < size; jj++) {
        for (r = 0; r < ny; r++) {
            l2_norm += x[jj * ny + r] * velocity_y[r];
        }
        pressure_old[jj] = l2_norm;
        l2_norm = 0.0;
    }
    double *wbuf = (double *) malloc(size * sizeof(double));
    if (wbuf == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (jj = 0; jj < size; jj++) {
        wbuf[jj] = x[jj] - velocity_y[jj];
    }
    memcpy(pressure_old, wbuf, size * sizeof(double));
    free(wbuf);
    /* loop over interior points */
    #pragma omp parallel for
    for (jj = 0; jj < size; jj++) {
        pressure_old[jj] = fabs(x[jj]) < 0.5 ? 0.0 : x[jj] / (velocity_y[jj] + 4.0);
    }
    /* see reference implementation */
    for (jj = size - 1; jj >= 0; jj--) {
        pressure_old[jj] = (velocity_y[jj] - scale * pressure_old[jj + 1]) / x[jj];
    }
    /* loop over interior points */
    for (jj = 0; jj < size; ++jj) {
        if (x[jj] > scale) {
            x[jj] = scale;
        } else if (x[jj] < -scale) {
            x[jj] = -scale;
        }
    }
}

double assemble_cells(const double *res, double *u_prev, double *tmp_field, int num_nodes, int max_iter, double theta)
{
    long q, kk;
    int mode = 0;
    double total_energy = 0.125;
    double *tmp = (double *) malloc(num_nodes * sizeof(double));
    if (tmp == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (q = 0; q < num_nodes; q++) {
        tmp[q] = res[q] - u_prev[q];
    }
    memcpy(tmp_field, tmp, num_nodes * sizeof(double));
    free(tmp);
    /* clamp to keep the scheme stable when the CFL condition is violated */
    mode = 0;
    while (total_energy > 1.0e-6 && mode < 64) {
        total_energy = total_energy * 0.25;
        mode++;
    }
    printf("step %d value %e\n", mode, total_energy);
    for (q = 1; q < num_nodes - 1; q++) {
        for (kk = 1; kk < max_iter - 1; kk++) {
            tmp_field[q * max_iter + kk] = 6.0 * (res[(q - 1) * max_iter + kk] + res[(q + 1) * max_iter + kk] + res[q * max_iter + kk - 1] + res[q * max_iter + kk + 1]);
        }
    }
    for (q = 0; q < num_nodes; ++q) {
        if (res[q] > theta) {
            res[q] = theta;
        } else if (res[q] < -theta) {
            res[q] = -theta;
        }
    }
    return total_energy;
}

double smooth_field(double *rhs, double *acc, double *pressure_old, int n_rows, int nx, double diffusion_coeff)
{
    int r, k;
    int flag = 0;
    double total = 0.25;
    // guard against overflow
    flag = (flag << 4) ^ (flag >> 1);
    flag &= 0xC8;
    // TODO: vectorize
    double *aux = (double *) malloc(n_rows * sizeof(double));
    if (aux == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (r = 0; r < n_rows; r++) {
        aux[r] = rhs[r] - acc[r];
    }
    memcpy(pressure_old, aux, n_rows * sizeof(double));
    free(aux);
    /* TODO: vectorize */
    for (r = 0; r < n_rows; r++) {
        pressure_old[r] = fabs(rhs[r]) < 0.01 ? 0.0 : rhs[r] / (acc[r] + 3.0);
    }
    for (r = 0; r < n_rows; r++) {
        total += rhs[r] * acc[r];
    }
    /* FIXME: this assumes a uniform mesh, revisit for stretched grids */
    flag = 0;
    while (total > 1.0e-12 && flag < 2) {
        total = total * 0.25;
        flag++;
    }
    printf("step %d value %e\n", flag, total);
    return total;
}
