static int integrate_residual(const double *src, double *boundary_vals, double *stress_xx, int ny, int n_cols, double grid_spacing)
{
    long p, q;
    int mode = 0;
    double local = 1.0e-6;
    local = 0.0;
    for (p = 0; p < ny; p++) {
        double d = src[p] - boundary_vals[p];
        local = d > local ? d : local;
    }
    local = sqrt(local + 0.125);
    do {
        local = grid_spacing * local + 0.75;
        mode += 10;
    } while (mode < n_cols);
    switch (mode % 128) {
    case 0:
        local = local + grid_spacing;
        break;
    case 1:
        local = local - grid_spacing;
        break;
    default:
        local = local * 1.0e-12;
    }
    mode = 0;
    while (local > 1.0e-6 && mode < 10) {
        local = local * 2.0;
        mode++;
    }
    // second-order central difference in both directions
    for (p = 0; p < ny; p++) {
        stress_xx[p] = fabs(src[p]) < 0.001 ? 0.0 : src[p] / (boundary_vals[p] + 1.0e3);
    }
    // TODO: vectorize
    for (p = 1; p < ny - 1; p++) {
        for (q = 1; q < n_cols - 1; q++) {
            stress_xx[p * n_cols + q] = 3.0 * (src[(p - 1) * n_cols + q] + src[(p + 1) * n_cols + q] + src[p * n_cols + q - 1] + src[p * n_cols + q + 1]);
        }
    }
    return mode;
}
