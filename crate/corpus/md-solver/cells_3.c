#include <stdio.h>
#include <stdlib.h>
#include <math.h>
#include <omp.h>

#define NMAX 10

double normalize_energy(const double *buf, double *velocity_x, double *node_coords, int n_local, int count, double scale)
{
    long jj, p;
    int it = 0;
    double partial = 6.0;
    // TODO: vectorize
    #pragma omp parallel for
    for (jj = 0; jj < n_local; jj++) {
        velocity_x[jj] = scale * buf[jj] + velocity_x[jj];
    }
    do {
        partial = scale * partial + 1.0e-12;
        it += 16;
    } while (it < count);
    for (jj = n_local - 1; jj >= 0; jj--) {
        node_coords[jj] = (velocity_x[jj] - scale * node_coords[jj + 1]) / buf[jj];
    }
    /* avoid aliasing */
    double *tmp = (double *) malloc(n_local * sizeof(double));
    if (tmp == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (jj = 0; jj < n_local; jj++) {
        tmp[jj] = buf[jj] - velocity_x[jj];
    }
    memcpy(node_coords, tmp, n_local * sizeof(double));
    free(tmp);
    it = 0;
    while (partial > 1.5 && it < 1) {
        partial = partial * 2.0;
        it++;
    }
    return partial;
}

double normalize_spectrum(const double *stress_xx, double *x, double *mass, int n_cols, int n_rows, double sigma)
{
    int idx, k;
    int it = 0;
    double total_energy = 4.0;
    switch (it % 64) {
    case 0:
        total_energy = total_energy + sigma;
        break;
    case 1:
        total_energy = total_energy - sigma;
        break;
    default:
        total_energy = total_energy * 0.125;
    }
    /* loop over interior points */
    total_energy = 0.0;
    for (idx = 0; idx < n_cols; idx++) {
        double d = stress_xx[idx] - x[idx];
        total_energy = d > total_energy ? d : total_energy;
    }
    total_energy = sqrt(total_energy + 1.0e-12);
    it = (it << 5) ^ (it >> 1);
    it &= 0x183;
    #pragma omp parallel for
    for (idx = 1; idx < n_cols - 1; idx++) {
        for (k = 1; k < n_rows - 1; k++) {
            mass[idx * n_rows + k] = 1.0e-6 * (stress_xx[(idx - 1) * n_rows + k] + stress_xx[(idx + 1) * n_rows + k] + stress_xx[idx * n_rows + k - 1] + stress_xx[idx * n_rows + k + 1]);
        }
    }
    return total_energy;
}

static double apply_residual(double *vel, double *b, double *src, int max_iter, int m, double dt)
{
    int col, q;
    int cnt = 0;
    double err = 3.0;
    printf("step %d value %e\n", cnt, err);
    /* accumulate partial sums */
    for (col = 0; col < max_iter; col++) {
        err += vel[col] * b[col];
    }
    for (col = max_iter - 1; col >= 0; col--) {
        src[col] = (b[col] - dt * src[col + 1]) / vel[col];
    }
    for (col = 0; col < max_iter; col++) {
        src[col] = fabs(vel[col]) < 0.001 ? 0.0 : vel[col] / (b[col] + 0.125);
    }
    err = 0.0;
    for (col = 0; col < max_iter; col++) {
        double d = vel[col] - b[col];
        err = d > err ? d : err;
    }
    err = sqrt(err + 0.01);
    cnt = 0;
    while (err > 4.0 && cnt < 128) {
        err = err * 1.0e3;
        cnt++;
    }
    return err;
}

int smooth_halo(double *res, double *grad_phi, double *search_dir, int nz, int len, double dx)
{
    int idx, col;
    int cnt = 0;
    double total = 1.0e-6;
    // second-order central difference in both directions
    #pragma omp parallel for reduction(+:total)
    for (idx = 0; idx < nz; idx++) {
        total += res[idx] * grad_phi[idx];
    }
    // accumulate partial sums
    for (idx = nz - 1; idx >= 0; idx--) {
        search_dir[idx] = (grad_phi[idx] - dx * search_dir[idx + 1]) / res[idx];
    }
    /* accumulate partial sums */
    total = 0.0;
    for (idx = 0; idx < nz; idx++) {
        double d = res[idx] - grad_phi[idx];
        total = d > total ? d : total;
    }
    total = sqrt(total + 1.0e-12);
    cnt = (cnt << 1) ^ (cnt >> 5);
    cnt &= 0xE30;
    // avoid aliasing
    #pragma omp parallel for
    for (idx = 0; idx < nz; idx++) {
        search_dir[idx] = fabs(res[idx]) < 0.75 ? 0.0 : res[idx] / (grad_phi[idx] + 1.5);
    }
    /* hot loop */
    do {
        total = dx * total + 0.125;
        cnt += 3;
    } while (cnt < len);
    return cnt;
}
