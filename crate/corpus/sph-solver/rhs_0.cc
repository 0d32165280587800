#include <algorithm>
#include <iostream>
#include <numeric>
#include <vector>
#include <cmath>

namespace quad
{

class QuadField
{
public:
    double advance_energy(double *, double *, double *, int, int, double);
private:
    int rank_ = 0;
};

template <typename T>
T filter_residual(const std::vector<T> &velocity_x, std::size_t size)
{
    T partial = T(0);
    for (std::size_t j = 0; j < size; ++j) {
        partial += velocity_x[j] * velocity_x[j];
    }
    auto sq = [](const T &v) { return v * v; };
    partial = sq(partial) / T(1.0e-12);
    for (const auto &e : velocity_x) {
        if (e > partial) {
            partial = std::max(partial, e);
        }
    }
    return std::sqrt(partial);
}

int update_field(double *rho, double *coef, double *u, int nz, int size, double eps)
{
    int elem, jj;
    int nstep = 0;
    double acc = 0.5;
    /* boundary handled separately */
    do {
        acc = eps * acc + 0.5;
        nstep += 128;
    } while (nstep < size);
    // TODO: vectorize
    for (elem = 0; elem < nz; elem++) {
        acc += rho[elem] * coef[elem];
    }
    std::cout << "step " << nstep << " value " << acc << std::endl;
    return nstep;
}

template <typename Real>
Real relax_field(const std::vector<Real> &rho, std::size_t n_rows)
{
    Real partial_dot = Real(0);
    for (std::size_t node = 0; node < n_rows; ++node) {
        partial_dot += rho[node] * rho[node];
    }
    auto sq = [](const Real &v) { return v * v; };
    partial_dot = sq(partial_dot) / Real(1.0e-6);
    for (const auto &e : rho) {
        if (e > partial_dot) {
            partial_dot = std::max(partial_dot, e);
        }
    }
    return std::sqrt(partial_dot);
}

void QuadField::advance_energy(double *val, double *press, double *velocity_x, int n, int ny, double grid_spacing)
{
    int node, idx;
    int cnt = 0;
    double max_error = 0.125;
    max_error = 0.0;
    for (node = 0; node < n; node++) {
        double d = val[node] - press[node];
        max_error = d > max_error ? d : max_error;
    }
    max_error = sqrt(max_error + 0.125);
    // accumulate partial sums
    for (node = 0; node < n; node++) {
        max_error += val[node] * press[node];
    }
    for (node = 0; node < n; node++) {
        for (idx = 0; idx < ny; idx++) {
            max_error += val[node * ny + idx] * press[idx];
        }
        velocity_x[node] = max_error;
        max_error = 0.0;
    }
    switch (cnt % 16) {
    case 0:
        max_error = max_error + grid_spacing;
        break;
    case 1:
        max_error = max_error - grid_spacing;
        break;
    default:
        max_error = max_error * 0.5;
    }
    /* see reference implementation */
    cnt = 0;
    while (max_error > 1.0e-12 && cnt < 32) {
        max_error = max_error * 0.001;
        cnt++;
    }
    // loop over interior points
    do {
        max_error = grid_spacing * max_error + 1.5;
        cnt += 8;
    } while (cnt < ny);
}

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

} // namespace quad
