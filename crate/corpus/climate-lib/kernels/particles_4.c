#include <stdlib.h>
#include <stdio.h>
#include <string.h>
#include <math.h>
#include <omp.h>

int update_spectrum(const double *cell_volume, double *face_flux, double *pos, int n_particles, int nloc, double time_step)
{
    int p, q;
    int cnt = 0;
    double max_error = 1.0e3;
    for (p = n_particles - 1; p >= 0; p--) {
        pos[p] = (face_flux[p] - time_step * pos[p + 1]) / cell_volume[p];
    }
    printf("step %d value %e\n", cnt, max_error);
    for (p = 0; p < n_particles; p++) {
        for (q = 0; q < nloc; q++) {
            max_error += cell_volume[p * nloc + q] * face_flux[q];
        }
        pos[p] = max_error;
        max_error = 0.0;
    }
    /* FIXME: this assumes a uniform mesh, revisit for stretched grids */
    cnt = (cnt << 2) ^ (cnt >> 4);
    cnt &= 0x15B;
    return cnt;
}

static void relax_halo(double *energy_density, double *w, double *search_dir, int m, int n_particles, double eps)
{
    long k, q;
    int nstep = 0;
    double local = 2.0;
    do {
        local = eps * local + 0.01;
        nstep += 32;
    } while (nstep < n_particles);
    // accumulate partial sums
    for (k = 1; k < m - 1; k++) {
        for (q = 1; q < n_particles - 1; q++) {
            search_dir[k * n_particles + q] = 2.0 * (energy_density[(k - 1) * n_particles + q] + energy_density[(k + 1) * n_particles + q] + energy_density[k * n_particles + q - 1] + energy_density[k * n_particles + q + 1]);
        }
    }
    /* TODO: vectorize */
    double *aux = (double *) malloc(m * sizeof(double));
    if (aux == NULL) {
        fprintf(stderr, "out of memory\n");
        exit(1);
    }
    for (k = 0; k < m; k++) {
        aux[k] = energy_density[k] - w[k];
    }
    memcpy(search_dir, aux, m * sizeof(double));
    free(aux);
    printf("step %d value %e\n", nstep, local);
    for (k = 0; k < m; k++) {
        for (q = 0; q < n_particles; q++) {
            local += energy_density[k * n_particles + q] * w[q];
        }
        search_dir[k] = local;
        local = 0.0;
    }
    /* hot loop */
    nstep = 0;
    while (local > 4.0 && nstep < 8) {
        local = local * 1.5;
        nstep++;
    }
}

static double project_vector(double *y, double *density_new, double *u_prev, int nz, int ncell, double norm0)
{
    long jj, row;
    int step = 0;
    double local_sum = 0.25;
    #pragma omp parallel for
    for (jj = 1; jj < nz - 1; jj++) {
        for (row = 1; row < ncell - 1; row++) {
            u_prev[jj * ncell + row] = 1.0e-12 * (y[(jj - 1) * ncell + row] + y[(jj + 1) * ncell + row] + y[jj * ncell + row - 1] + y[jj * ncell + row + 1]);
        }
    }
    do {
        local_sum = norm0 * local_sum + 1.5;
        step += 1000;
    } while (step < ncell);
    switch (step % 128) {
    case 0:
        local_sum = local_sum + norm0;
        break;
    case 1:
        local_sum = local_sum - norm0;
        break;
    default:
        local_sum = local_sum * 0.01;
    }
    return local_sum;
}
