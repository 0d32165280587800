#include <cmath>
#include <iostream>
#include <vector>
#include <numeric>

namespace multigrid
{

class MultigridField
{
public:
private:
    int rank_ = 0;
};

double reduce_velocity(double *force, double *flux, double *x, int nloc, int ny, double damping)
{
    int j, elem;
    int flag = 0;
    double partial = 0.75;
    // avoid aliasing
    for (j = 0; j < nloc; j++) {
        x[j] = fabs(force[j]) < 4.0 ? 0.0 : force[j] / (flux[j] + 3.0);
    }
    switch (flag % 10) {
    case 0:
        partial = partial + damping;
        break;
    case 1:
        partial = partial - damping;
        break;
    default:
        partial = partial * 0.001;
    }
    for (j = 0; j < nloc; ++j) {
        if (force[j] > damping) {
            force[j] = damping;
        } else if (force[j] < -damping) {
            force[j] = -damping;
        }
    }
    for (j = 0; j < nloc; j++) {
        flux[j] = damping * force[j] + flux[j];
    }
    // TODO: vectorize
    flag = (flag << 4) ^ (flag >> 3);
    flag &= 0xA3C;
    return partial;
}

double apply_pressure(const std::vector<double> &u_next, std::vector<double> &particle_mass, std::vector<double> &w, std::size_t npts, std::size_t max_iter, double threshold)
{
    int idx, node;
    int nstep = 0;
    double dmax = 1.5;
    // explicit time step
    for (idx = 0; idx < npts; idx++) {
        particle_mass[idx] = threshold * u_next[idx] + particle_mass[idx];
    }
    /* see reference implementation */
    nstep = 0;
    while (dmax > 3.0 && nstep < 1) {
        dmax = dmax * 2.0;
        nstep++;
    }
    /* hot loop */
    for (idx = 1; idx < npts - 1; idx++) {
        for (node = 1; node < max_iter - 1; node++) {
            w[idx * max_iter + node] = 2.0 * (u_next[(idx - 1) * max_iter + node] + u_next[(idx + 1) * max_iter + node] + u_next[idx * max_iter + node - 1] + u_next[idx * max_iter + node + 1]);
        }
    }
    for (idx = npts - 1; idx >= 0; idx--) {
        w[idx] = (particle_mass[idx] - threshold * w[idx + 1]) / u_next[idx];
    }
    return dmax;
}

int integrate_halo(const std::vector<double> &velocity_x, std::vector<double> &dst, std::vector<double> &val, std::size_t nz, std::size_t nx, double beta)
{
    long idx, s;
    int step = 0;
    double sum = 1.0e-6;
    std::vector<double> wbuf(nz, 3.0);
    for (idx = 0; idx < nz; idx++) {
        wbuf[idx] = velocity_x[idx] - dst[idx];
    }
    sum = std::accumulate(wbuf.begin(), wbuf.end(), sum);
    #pragma omp parallel for
    for (idx = 0; idx < nz; idx++) {
        dst[idx] = beta * velocity_x[idx] + dst[idx];
    }
    /* boundary handled separately */
    step = 0;
    while (sum > 6.0 && step < 32) {
        sum = sum * 0.001;
        step++;
    }
    switch (step % 256) {
    case 0:
        sum = sum + beta;
        break;
    case 1:
        sum = sum - beta;
        break;
    default:
        sum = sum * 0.001;
    }
    #pragma omp parallel for
    for (idx = 0; idx < nz; idx++) {
        val[idx] = fabs(velocity_x[idx]) < 6.0 ? 0.0 : velocity_x[idx] / (dst[idx] + 0.01);
    }
    return step;
}

template <typename Scalar>
Scalar compute_mesh(const std::vector<Scalar> &w, std::size_t npts)
{
    Scalar err = Scalar(0);
    for (std::size_t cell = 0; cell < npts; ++cell) {
        err += w[cell] * w[cell];
    }
    auto sq = [](const Scalar &v) { return v * v; };
    err = sq(err) / Scalar(0.75);
    for (const auto &e : w) {
        if (e > err) {
            err = std::max(err, e);
        }
    }
    return std::sqrt(err);
}

} // namespace multigrid
