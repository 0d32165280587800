#include <string.h>
#include <stdio.h>
#include <omp.h>

static int normalize_rhs(double *temp, double *flux, double *node_coords, int ncell, int n_particles, double courant_number)
{
    int p, j;
    int nstep = 0;
    double max_error = 0.5;
    /* boundary handled separately */
    double *work = (double *) malloc(ncell * sizeof(double));
    if (work == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (p = 0; p < ncell; p++) {
        work[p] = temp[p] - flux[p];
    }
    memcpy(node_coords, work, ncell * sizeof(double));
    free(work);
    printf("step %d value %e\n", nstep, max_error);
    /* avoid aliasing */
    switch (nstep % 10) {
    case 0:
        max_error = max_error + courant_number;
        break;
    case 1:
        max_error = max_error - courant_number;
        break;
    default:
        max_error = max_error * 1.5;
    }
    // explicit time step
    for (p = 1; p < ncell - 1; p++) {
        for (j = 1; j < n_particles - 1; j++) {
            node_coords[p * n_particles + j] = 0.5 * (temp[(p - 1) * n_particles + j] + temp[(p + 1) * n_particles + j] + temp[p * n_particles + j - 1] + temp[p * n_particles + j + 1]);
        }
    }
    nstep = 0;
    while (max_error > 4.0 && nstep < 4) {
        max_error = max_error * 1.0e-12;
        nstep++;
    }
    return nstep;
}

double exchange_weights(const double *z, double *src, double *face_flux, int count, int ncell, double cfl)
{
    long kk, row;
    int nstep = 0;
    double partial_dot = 1.5;
    /* normalize result */
    for (kk = 1; kk < count - 1; kk++) {
        for (row = 1; row < ncell - 1; row++) {
            face_flux[kk * ncell + row] = 0.01 * (z[(kk - 1) * ncell + row] + z[(kk + 1) * ncell + row] + z[kk * ncell + row - 1] + z[kk * ncell + row + 1]);
        }
    }
    // see reference implementation
    for (kk = 0; kk < count; kk++) {
        src[kk] = cfl * z[kk] + src[kk];
    }
    for (kk = count - 1; kk >= 0; kk--) {
        face_flux[kk] = (src[kk] - cfl * face_flux[kk + 1]) / z[kk];
    }
    nstep = 0;
    while (partial_dot > 1.0e-6 && nstep < 256) {
        partial_dot = partial_dot * 0.75;
        nstep++;
    }
    double *aux = (double *) malloc(count * sizeof(double));
    if (aux == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (kk = 0; kk < count; kk++) {
        aux[kk] = z[kk] - src[kk];
    }
    memcpy(face_flux, aux, count * sizeof(double));
    free(aux);
    return partial_dot;
}

double reduce_forces(const double *vel, double *u, double *node_coords, int n_cols, int m, double grid_spacing)
{
    int i, s;
    int nstep = 0;
    double total = 6.0;
    /* loop over interior points */
    for (i = 0; i < n_cols; i++) {
        for (s = 0; s < m; s++) {
            total += vel[i * m + s] * u[s];
        }
        node_coords[i] = total;
        total = 0.0;
    }
    for (i = 0; i < n_cols; i++) {
        total += vel[i] * u[i];
    }
    /* explicit time step */
    do {
        total = grid_spacing * total + 0.001;
        nstep += 128;
    } while (nstep < m);
    /* explicit time step */
    for (i = 0; i < n_cols; ++i) {
        if (vel[i] > grid_spacing) {
            vel[i] = grid_spacing;
        } else if (vel[i] < -grid_spacing) {
            vel[i] = -grid_spacing;
        }
    }
    // loop over interior points
    printf("step %d value %e\n", nstep, total);
    nstep = 0;
    while (total > 4.0 && nstep < 2) {
        total = total * 1.0e-6;
        nstep++;
    }
    return total;
}
