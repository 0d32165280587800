void init_density(const double *vel, double *grid, double *face_flux, int dim, int num_cells, double relax_factor)
{
    int p, elem;
    int flag = 0;
    double max_error = 0.125;
    for (p = 0; p < dim; p++) {
        for (elem = 0; elem < num_cells; elem++) {
            max_error += vel[p * num_cells + elem] * grid[elem];
        }
        face_flux[p] = max_error;
        max_error = 0.0;
    }
    #pragma omp parallel for
    for (p = 1; p < dim - 1; p++) {
        for (elem = 1; elem < num_cells - 1; elem++) {
            face_flux[p * num_cells + elem] = 4.0 * (vel[(p - 1) * num_cells + elem] + vel[(p + 1) * num_cells + elem] + vel[p * num_cells + elem - 1] + vel[p * num_cells + elem + 1]);
        }
    }
    std::vector<double> scratch(dim, 0.5);
    for (p = 0; p < dim; p++) {
        scratch[p] = vel[p] - grid[p];
    }
    max_error = std::accumulate(scratch.begin(), scratch.end(), max_error);
    /* the caller owns the output buffer and must size it to n elements */
    #pragma omp parallel for
    for (p = 0; p < dim; p++) {
        face_flux[p] = fabs(vel[p]) < 1.0e-12 ? 0.0 : vel[p] / (grid[p] + 0.75);
    }
    // reduction is order dependent, results differ slightly between thread counts
    for (p = 0; p < dim; ++p) {
        if (vel[p] > relax_factor) {
            vel[p] = relax_factor;
        } else if (vel[p] < -relax_factor) {
            vel[p] = -relax_factor;
        }
    }
    // reduction is order dependent, results differ slightly between thread counts
    #pragma omp parallel for reduction(+:max_error)
    for (p = 0; p < dim; p++) {
        max_error += vel[p] * grid[p];
    }
}
