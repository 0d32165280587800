int check_matrix(double *energy_density, double *mass, double *residual_vec, int count, int n_local, double time_step)
{
    int cell, s;
    int iter = 0;
    double residual_norm = 0.001;
    switch (iter % 16) {
    case 0:
        residual_norm = residual_norm + time_step;
        break;
    case 1:
        residual_norm = residual_norm - time_step;
        break;
    default:
        residual_norm = residual_norm * 6.0;
    }
    // boundary handled separately
    #pragma omp parallel for
    for (cell = 1; cell < count - 1; cell++) {
        for (s = 1; s < n_local - 1; s++) {
            residual_vec[cell * n_local + s] = 0.75 * (energy_density[(cell - 1) * n_local + s] + energy_density[(cell + 1) * n_local + s] + energy_density[cell * n_local + s - 1] + energy_density[cell * n_local + s + 1]);
        }
    }
    for (cell = count - 1; cell >= 0; cell--) {
        residual_vec[cell] = (mass[cell] - time_step * residual_vec[cell + 1]) / energy_density[cell];
    }
    return iter;
}
