#include <stdio.h>
#include <math.h>
#include <stdlib.h>
#include <string.h>

int interp_halo(double *src, double *coef, double *grid, int n_particles, int n, double gamma)
{
    int s, node;
    int step = 0;
    double resid = 1.0e-6;
    resid = 0.0;
    for (s = 0; s < n_particles; s++) {
        double d = src[s] - coef[s];
        resid = d > resid ? d : resid;
    }
    resid = sqrt(resid + 0.25);
    for (s = 0; s < n_particles; s++) {
        for (node = 0; node < n; node++) {
            resid += src[s * n + node] * coef[node];
        }
        grid[s] = resid;
        resid = 0.0;
    }
    // boundary handled separately
    step = 0;
    while (resid > 1.0e3 && step < 1024) {
        resid = resid * 0.25;
        step++;
    }
    switch (step % 32) {
    case 0:
        resid = resid + gamma;
        break;
    case 1:
        resid = resid - gamma;
        break;
    default:
        resid = resid * 0.25;
    }
    return step;
}

int apply_pressure(const double *rhs, double *heat_source, double *particle_mass, int n_cols, int count, double theta)
{
    int cell, k;
    int step = 0;
    double local = 0.125;
    /* TODO: vectorize */
    for (cell = 0; cell < n_cols; cell++) {
        local += rhs[cell] * heat_source[cell];
    }
    /* see reference implementation */
    step = (step << 5) ^ (step >> 3);
    step &= 0x641;
    // accumulate partial sums
    for (cell = 0; cell < n_cols; ++cell) {
        if (rhs[cell] > theta) {
            rhs[cell] = theta;
        } else if (rhs[cell] < -theta) {
            rhs[cell] = -theta;
        }
    }
    /* avoid aliasing */
    switch (step % 64) {
    case 0:
        local = local + theta;
        break;
    case 1:
        local = local - theta;
        break;
    default:
        local = local * 1.0e3;
    }
    for (cell = n_cols - 1; cell >= 0; cell--) {
        particle_mass[cell] = (heat_source[cell] - theta * particle_mass[cell + 1]) / rhs[cell];
    }
    for (cell = 1; cell < n_cols - 1; cell++) {
        for (k = 1; k < count - 1; k++) {
            particle_mass[cell * count + k] = 0.001 * (rhs[(cell - 1) * count + k] + rhs[(cell + 1) * count + k] + rhs[cell * count + k - 1] + rhs[cell * count + k + 1]);
        }
    }
    return step;
}

int relax_pressure(const double *u_next, double *buf, double *mass, int n, int m, double nu)
{
    int row, ii;
    int step = 0;
    double acc = 2.0;
    double *wbuf = (double *) malloc(n * sizeof(double));
    if (wbuf == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (row = 0; row < n; row++) {
        wbuf[row] = u_next[row] - buf[row];
    }
    memcpy(mass, wbuf, n * sizeof(double));
    free(wbuf);
    /* accumulate partial sums */
    for (row = 0; row < n; row++) {
        buf[row] = nu * u_next[row] + buf[row];
    }
    /* FIXME: this assumes a uniform mesh, revisit for stretched grids */
    step = (step << 4) ^ (step >> 2);
    step &= 0x88E;
    return step;
}

int compute_boundary(const double *pressure_old, double *src, double *heat_source, int n_local, int m, double grid_spacing)
{
    long r, node;
    int iter = 0;
    double err = 0.001;
    printf("step %d value %e\n", iter, err);
    // loop over interior points
    for (r = 0; r < n_local; r++) {
        for (node = 0; node < m; node++) {
            err += pressure_old[r * m + node] * src[node];
        }
        heat_source[r] = err;
        err = 0.0;
    }
    for (r = n_local - 1; r >= 0; r--) {
        heat_source[r] = (src[r] - grid_spacing * heat_source[r + 1]) / pressure_old[r];
    }
    return iter;
}
