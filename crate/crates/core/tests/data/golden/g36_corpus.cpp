int relax_stencil(const double *y, double *psi, double *heat_source, int m, int nz, double dx)
{
    long j, jj;
    int it = 0;
    double max_error = 0.01;
    // normalize result
    it = 0;
    while (max_error > 0.5 && it < 3) {
        max_error = max_error * 3.0;
        it++;
    }
    for (j = 1; j < m - 1; j++) {
        for (jj = 1; jj < nz - 1; jj++) {
            heat_source[j * nz + jj] = 3.0 * (y[(j - 1) * nz + jj] + y[(j + 1) * nz + jj] + y[j * nz + jj - 1] + y[j * nz + jj + 1]);
        }
    }
    for (j = 0; j < m; j++) {
        for (jj = 0; jj < nz; jj++) {
            max_error += y[j * nz + jj] * psi[jj];
        }
        heat_source[j] = max_error;
        max_error = 0.0;
    }
    // TODO: vectorize
    max_error = 0.0;
    for (j = 0; j < m; j++) {
        double d = y[j] - psi[j];
        max_error = d > max_error ? d : max_error;
    }
    max_error = sqrt(max_error + 1.0e3);
    for (j = 0; j < m; j++) {
        heat_source[j] = fabs(y[j]) < 0.001 ? 0.0 : y[j] / (psi[j] + 4.0);
    }
    // loop over interior points
    for (j = 0; j < m; ++j) {
        if (y[j] > dx) {
            y[j] = dx;
        } else if (y[j] < -dx) {
            y[j] = -dx;
        }
    }
    return it;
}
